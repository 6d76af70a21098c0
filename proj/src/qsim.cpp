#include "hgt/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hgt {

namespace {

// Element indices grouped by oracle value: ranges[i] delimits the positions
// in xs holding the i-th distinct value.
struct ValueClasses {
  std::vector<std::int64_t> xs;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

ValueClasses group_by_value(const std::vector<std::int64_t>& table) {
  ValueClasses vc;
  vc.xs.resize(table.size());
  std::iota(vc.xs.begin(), vc.xs.end(), 0);
  std::sort(vc.xs.begin(), vc.xs.end(), [&](std::int64_t a, std::int64_t b) {
    return table[static_cast<std::size_t>(a)] < table[static_cast<std::size_t>(b)] ||
           (table[static_cast<std::size_t>(a)] == table[static_cast<std::size_t>(b)] && a < b);
  });
  std::size_t start = 0;
  for (std::size_t i = 1; i <= vc.xs.size(); ++i) {
    if (i == vc.xs.size() ||
        table[static_cast<std::size_t>(vc.xs[i])] !=
            table[static_cast<std::size_t>(vc.xs[start])]) {
      vc.ranges.emplace_back(start, i);
      start = i;
    }
  }
  return vc;
}

double norm_sq(const std::complex<double>& z) { return std::norm(z); }

}  // namespace

std::vector<std::int64_t> SamplingDistribution::support() const {
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < prob.size(); ++i) {
    if (prob[i] > kSupportEps) s.push_back(static_cast<std::int64_t>(i));
  }
  return s;
}

void SamplingDistribution::check_normalized() const {
  double total = 0.0;
  for (double p : prob) {
    if (p < -kSupportEps) throw std::logic_error("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTol) {
    throw std::logic_error("sampling distribution does not sum to 1");
  }
}

SamplingDistribution fourier_distribution(const FunctionOracle& f) {
  const Group& g = f.domain();
  if (!g.is_abelian()) {
    throw std::invalid_argument("fourier_distribution requires an Abelian group");
  }
  f.note_simulation_sweep();
  const ValueClasses vc = group_by_value(f.table());
  const std::int64_t n = g.order();
  SamplingDistribution d;
  d.space = OutcomeSpace::AbelianCharacters;
  d.prob.assign(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t y = 0; y < n; ++y) {
    double acc = 0.0;
    for (const auto& [lo, hi] : vc.ranges) {
      std::complex<double> amp{0.0, 0.0};
      for (std::size_t i = lo; i < hi; ++i) amp += g.character(y, vc.xs[i]);
      acc += norm_sq(amp);
    }
    d.prob[static_cast<std::size_t>(y)] = acc / (static_cast<double>(n) * static_cast<double>(n));
  }
  d.check_normalized();
  return d;
}

SamplingDistribution fourier_distribution_general(const std::vector<Irrep>& reps,
                                                  const FunctionOracle& f) {
  const Group& g = f.domain();
  f.note_simulation_sweep();
  const ValueClasses vc = group_by_value(f.table());
  const double n = static_cast<double>(g.order());
  SamplingDistribution d;
  d.space = OutcomeSpace::IrrepLabels;
  d.prob.assign(reps.size(), 0.0);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto dim = static_cast<std::size_t>(reps[r].dim());
    double acc = 0.0;
    std::vector<std::complex<double>> sums(dim * dim);
    for (const auto& [lo, hi] : vc.ranges) {
      std::fill(sums.begin(), sums.end(), std::complex<double>{0.0, 0.0});
      for (std::size_t i = lo; i < hi; ++i) {
        const auto m = reps[r].eval(g, vc.xs[i]);
        for (std::size_t e = 0; e < sums.size(); ++e) sums[e] += m[e];
      }
      for (const auto& z : sums) acc += norm_sq(z);
    }
    d.prob[r] = static_cast<double>(reps[r].dim()) * acc / (n * n);
  }
  d.check_normalized();
  return d;
}

namespace {

// Shared pair-distribution kernel: amplitudes of value classes are
// accumulated separately for f0 and f1; the b branch combines them with a
// (-1)^b sign. `eval` yields the dim x dim matrix of outcome position r.
template <typename Eval>
SamplingDistribution pair_distribution_impl(const PairOracle& f, std::size_t outcomes,
                                            OutcomeSpace space, Eval&& eval,
                                            const std::vector<std::int64_t>& dims) {
  const Group& g = f.domain();
  f.note_simulation_sweep();
  const double n2 = 4.0 * static_cast<double>(g.order()) * static_cast<double>(g.order());

  // one joint value-class pass: collect distinct values across both tables
  std::vector<std::int64_t> values;
  values.reserve(2 * f.table(0).size());
  values.insert(values.end(), f.table(0).begin(), f.table(0).end());
  values.insert(values.end(), f.table(1).begin(), f.table(1).end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto value_slot = [&](std::int64_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(values.begin(), values.end(), v) - values.begin());
  };

  SamplingDistribution d;
  d.space = space;
  d.prob.assign(2 * outcomes, 0.0);
  for (std::size_t r = 0; r < outcomes; ++r) {
    const auto dim = static_cast<std::size_t>(dims[r]);
    const std::size_t block = dim * dim;
    std::vector<std::complex<double>> acc0(values.size() * block);
    std::vector<std::complex<double>> acc1(values.size() * block);
    for (std::int64_t x = 0; x < g.order(); ++x) {
      const auto m = eval(r, x);
      const std::size_t s0 = value_slot(f.table(0)[static_cast<std::size_t>(x)]);
      const std::size_t s1 = value_slot(f.table(1)[static_cast<std::size_t>(x)]);
      for (std::size_t e = 0; e < block; ++e) {
        acc0[s0 * block + e] += m[e];
        acc1[s1 * block + e] += m[e];
      }
    }
    double p0 = 0.0, p1 = 0.0;
    for (std::size_t i = 0; i < values.size() * block; ++i) {
      p0 += norm_sq(acc0[i] + acc1[i]);
      p1 += norm_sq(acc0[i] - acc1[i]);
    }
    const double scale = static_cast<double>(dims[r]) / n2;
    d.prob[2 * r] = scale * p0;
    d.prob[2 * r + 1] = scale * p1;
  }
  d.check_normalized();
  return d;
}

}  // namespace

SamplingDistribution fourier_distribution_pair(const PairOracle& f) {
  const Group& g = f.domain();
  if (!g.is_abelian()) {
    throw std::invalid_argument("fourier_distribution_pair requires an Abelian group");
  }
  std::vector<std::int64_t> dims(static_cast<std::size_t>(g.order()), 1);
  return pair_distribution_impl(
      f, static_cast<std::size_t>(g.order()), OutcomeSpace::PairCharacters,
      [&](std::size_t y, std::int64_t x) {
        return std::vector<std::complex<double>>{g.character(static_cast<std::int64_t>(y), x)};
      },
      dims);
}

SamplingDistribution fourier_distribution_pair_general(const std::vector<Irrep>& reps,
                                                       const PairOracle& f) {
  const Group& g = f.domain();
  std::vector<std::int64_t> dims(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) dims[r] = reps[r].dim();
  return pair_distribution_impl(
      f, reps.size(), OutcomeSpace::PairIrrepLabels,
      [&](std::size_t r, std::int64_t x) { return reps[r].eval(g, x); }, dims);
}

std::int64_t sample_one(const SamplingDistribution& d, RngStream& rng) {
  const double u = rng.next_unit();
  double cum = 0.0;
  for (std::size_t i = 0; i < d.prob.size(); ++i) {
    cum += d.prob[i];
    if (u < cum) return static_cast<std::int64_t>(i);
  }
  // numerical leftovers: return the last outcome with positive mass
  for (std::size_t i = d.prob.size(); i-- > 0;) {
    if (d.prob[i] > 0.0) return static_cast<std::int64_t>(i);
  }
  throw std::logic_error("cannot sample from an empty distribution");
}

std::vector<std::int64_t> sample(const SamplingDistribution& d, RngStream& rng,
                                 std::int64_t n) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(sample_one(d, rng));
  return out;
}

std::int64_t CosetAverages::multiplicity(std::int64_t coset, std::int64_t value) const {
  const auto& row = counts[static_cast<std::size_t>(coset)];
  auto it = std::lower_bound(row.begin(), row.end(),
                             std::make_pair(value, std::int64_t{0}));
  if (it != row.end() && it->first == value) return it->second;
  return 0;
}

Rational CosetAverages::weight(std::int64_t x, std::int64_t value) const {
  const std::int64_t c = cosets.coset_of[static_cast<std::size_t>(x)];
  return Rational(multiplicity(c, value), subgroup_order);
}

CosetAverages coset_averages(const Group& g, const std::vector<std::int64_t>& table,
                             const Subgroup& h) {
  CosetAverages mu;
  mu.cosets = left_cosets(g, h);
  mu.subgroup_order = h.order();
  mu.counts.resize(static_cast<std::size_t>(mu.cosets.count()));
  for (std::size_t c = 0; c < mu.counts.size(); ++c) {
    std::vector<std::int64_t> vals;
    vals.reserve(static_cast<std::size_t>(h.order()));
    const std::int64_t rep = mu.cosets.reps[c];
    for (std::int64_t e : h.elems) {
      vals.push_back(table[static_cast<std::size_t>(g.mul(rep, e))]);
    }
    std::sort(vals.begin(), vals.end());
    auto& row = mu.counts[c];
    std::size_t start = 0;
    for (std::size_t i = 1; i <= vals.size(); ++i) {
      if (i == vals.size() || vals[i] != vals[start]) {
        row.emplace_back(vals[start], static_cast<std::int64_t>(i - start));
        start = i;
      }
    }
  }
  return mu;
}

Rational state_defect(const FunctionOracle& f, const Subgroup& h) {
  const Group& g = f.domain();
  const CosetAverages mu = coset_averages(g, f.table(), h);
  // per coset the defect contribution reduces to |H|^2 - sum_s m(s)^2
  std::int64_t num = 0;
  const std::int64_t hh = h.order() * h.order();
  for (const auto& row : mu.counts) {
    std::int64_t sq = 0;
    for (const auto& [value, m] : row) sq += m * m;
    num += hh - sq;
  }
  return Rational(num, g.order() * h.order());
}

Rational pair_defect(const PairOracle& f, const Subgroup& h) {
  const Group& g = f.domain();
  const CosetAverages mu0 = coset_averages(g, f.table(0), h);
  const CosetAverages mu1 = coset_averages(g, f.table(1), h);
  std::int64_t num = 0;
  for (std::size_t c = 0; c < mu0.counts.size(); ++c) {
    // merge the two sorted multiplicity rows
    const auto& r0 = mu0.counts[c];
    const auto& r1 = mu1.counts[c];
    std::size_t i = 0, j = 0;
    while (i < r0.size() || j < r1.size()) {
      std::int64_t m0 = 0, m1 = 0;
      if (j >= r1.size() || (i < r0.size() && r0[i].first < r1[j].first)) {
        m0 = r0[i++].second;
      } else if (i >= r0.size() || r1[j].first < r0[i].first) {
        m1 = r1[j++].second;
      } else {
        m0 = r0[i++].second;
        m1 = r1[j++].second;
      }
      num += (m0 - m1) * (m0 - m1);
    }
  }
  // sum over x collapses to |H| copies per coset, cancelling one |H| factor
  return Rational(num, 2 * g.order() * h.order());
}

bool char_trivial_on(const Group& g, std::int64_t y, const Subgroup& h) {
  for (std::int64_t x : h.gens) {
    if (g.character_phase(y, x) != 0) return false;
  }
  return true;
}

double mass_outside_orthogonal(const Group& g, const SamplingDistribution& d,
                               const Subgroup& h) {
  double mass = 0.0;
  for (std::size_t y = 0; y < d.prob.size(); ++y) {
    if (!char_trivial_on(g, static_cast<std::int64_t>(y), h)) mass += d.prob[y];
  }
  return mass;
}

double mass_outside_orthogonal_general(const std::vector<Irrep>& reps,
                                       const SamplingDistribution& d,
                                       const Subgroup& h) {
  double mass = 0.0;
  for (std::size_t r = 0; r < d.prob.size(); ++r) {
    if (!reps[r].trivial_on(h)) mass += d.prob[r];
  }
  return mass;
}

double pair_mass_b1_inside_orthogonal(const Group& g, const SamplingDistribution& d,
                                      const Subgroup& h) {
  double mass = 0.0;
  for (std::size_t code = 1; code < d.prob.size(); code += 2) {
    const auto y = static_cast<std::int64_t>(code / 2);
    if (char_trivial_on(g, y, h)) mass += d.prob[code];
  }
  return mass;
}

double pair_mass_b1_inside_orthogonal_general(const std::vector<Irrep>& reps,
                                              const SamplingDistribution& d,
                                              const Subgroup& h) {
  double mass = 0.0;
  for (std::size_t code = 1; code < d.prob.size(); code += 2) {
    if (reps[code / 2].trivial_on(h)) mass += d.prob[code];
  }
  return mass;
}

QftState qft_coset_state(const Group& g, std::int64_t x, const Subgroup& h) {
  if (!g.is_abelian()) {
    throw std::invalid_argument("qft_coset_state requires an Abelian group");
  }
  const double scale =
      1.0 / std::sqrt(static_cast<double>(g.order()) * static_cast<double>(h.order()));
  QftState st;
  st.amp.assign(static_cast<std::size_t>(g.order()), {0.0, 0.0});
  for (std::int64_t y = 0; y < g.order(); ++y) {
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t e : h.elems) acc += g.character(y, g.mul(x, e));
    st.amp[static_cast<std::size_t>(y)] = scale * acc;
  }
  return st;
}

QftState qft_coset_state_general(const Group& g, const std::vector<Irrep>& reps,
                                 std::int64_t x, const Subgroup& h) {
  if (!h.normal) {
    throw std::invalid_argument("coset-state mapping requires a normal subgroup");
  }
  QftState st;
  st.offset.resize(reps.size());
  std::size_t total = 0;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    st.offset[r] = total;
    total += static_cast<std::size_t>(reps[r].dim() * reps[r].dim());
  }
  st.amp.assign(total, {0.0, 0.0});
  const double base =
      1.0 / std::sqrt(static_cast<double>(g.order()) * static_cast<double>(h.order()));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const double scale = base * std::sqrt(static_cast<double>(reps[r].dim()));
    const std::size_t block = static_cast<std::size_t>(reps[r].dim() * reps[r].dim());
    for (std::int64_t e : h.elems) {
      const auto m = reps[r].eval(g, g.mul(x, e));
      for (std::size_t i = 0; i < block; ++i) st.amp[st.offset[r] + i] += scale * m[i];
    }
  }
  return st;
}

QftState orthogonal_coset_state(const Group& g, std::int64_t x, const Subgroup& h) {
  if (!g.is_abelian()) {
    throw std::invalid_argument("orthogonal_coset_state requires an Abelian group");
  }
  const double scale =
      std::sqrt(static_cast<double>(h.order()) / static_cast<double>(g.order()));
  QftState st;
  st.amp.assign(static_cast<std::size_t>(g.order()), {0.0, 0.0});
  for (std::int64_t y = 0; y < g.order(); ++y) {
    if (char_trivial_on(g, y, h)) {
      st.amp[static_cast<std::size_t>(y)] = scale * g.character(y, x);
    }
  }
  return st;
}

QftState orthogonal_coset_state_general(const Group& g, const std::vector<Irrep>& reps,
                                        std::int64_t x, const Subgroup& h) {
  QftState st;
  st.offset.resize(reps.size());
  std::size_t total = 0;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    st.offset[r] = total;
    total += static_cast<std::size_t>(reps[r].dim() * reps[r].dim());
  }
  st.amp.assign(total, {0.0, 0.0});
  const double base =
      std::sqrt(static_cast<double>(h.order()) / static_cast<double>(g.order()));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    if (!reps[r].trivial_on(h)) continue;
    const double scale = base * std::sqrt(static_cast<double>(reps[r].dim()));
    const auto m = reps[r].eval(g, x);
    for (std::size_t i = 0; i < m.size(); ++i) st.amp[st.offset[r] + i] = scale * m[i];
  }
  return st;
}

double max_abs_diff(const QftState& a, const QftState& b) {
  if (a.amp.size() != b.amp.size()) {
    throw std::invalid_argument("state dimensions differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
  }
  return worst;
}

}  // namespace hgt
