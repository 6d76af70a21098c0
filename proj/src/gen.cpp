#include "hgt/gen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgt {

namespace {

std::vector<std::int64_t> random_table(const Group& g, std::int64_t value_count,
                                       RngStream& rng) {
  if (value_count < 1) throw std::invalid_argument("value count must be positive");
  std::vector<std::int64_t> t(static_cast<std::size_t>(g.order()));
  for (auto& v : t) v = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(value_count)));
  return t;
}

std::int64_t cube_universe(const Group& g) {
  const std::int64_t n = g.order();
  if (n > 2'000'000) throw std::overflow_error("value universe |G|^3 exceeds 64-bit practicality");
  return n * n * n;
}

}  // namespace

FunctionOracle random_function(const Group& g, std::int64_t value_count, RngStream& rng) {
  return FunctionOracle(g, random_table(g, value_count, rng), value_count);
}

FunctionOracle random_periodic(const Group& g, const Subgroup& h,
                               std::int64_t value_count, RngStream& rng) {
  if (value_count < 1) throw std::invalid_argument("value count must be positive");
  const CosetTable cosets = left_cosets(g, h);
  std::vector<std::int64_t> per_coset(static_cast<std::size_t>(cosets.count()));
  for (auto& v : per_coset) v = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(value_count)));
  std::vector<std::int64_t> table(static_cast<std::size_t>(g.order()));
  for (std::int64_t x = 0; x < g.order(); ++x) {
    table[static_cast<std::size_t>(x)] = per_coset[static_cast<std::size_t>(cosets.coset_of[static_cast<std::size_t>(x)])];
  }
  return FunctionOracle(g, std::move(table), value_count);
}

FunctionOracle injective_oracle(const Group& g) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(g.order()));
  std::iota(table.begin(), table.end(), 0);
  return FunctionOracle(g, std::move(table), g.order());
}

PairOracle hidden_translation_pair(const Group& g, std::int64_t u,
                                   std::int64_t value_count, RngStream& rng) {
  std::vector<std::int64_t> f1 = random_table(g, value_count, rng);
  std::vector<std::int64_t> f0(f1.size());
  for (std::int64_t x = 0; x < g.order(); ++x) {
    f0[static_cast<std::size_t>(x)] = f1[static_cast<std::size_t>(g.mul(x, u))];
  }
  return PairOracle(g, std::move(f0), std::move(f1), value_count);
}

PairOracle random_pair(const Group& g, std::int64_t value_count, RngStream& rng) {
  auto f0 = random_table(g, value_count, rng);
  auto f1 = random_table(g, value_count, rng);
  return PairOracle(g, std::move(f0), std::move(f1), value_count);
}

PairOracle disjoint_range_pair(const Group& g) {
  const std::int64_t n = g.order();
  std::vector<std::int64_t> f0(static_cast<std::size_t>(n)), f1(static_cast<std::size_t>(n));
  std::iota(f0.begin(), f0.end(), 0);
  std::iota(f1.begin(), f1.end(), n);
  return PairOracle(g, std::move(f0), std::move(f1), 2 * n);
}

PairOracle sample_translated_pair(const Group& g, RngStream& rng) {
  if (!g.is_abelian()) throw std::invalid_argument("lower-bound instances use Abelian groups");
  const std::int64_t universe = cube_universe(g);
  std::vector<std::int64_t> f1 = random_table(g, universe, rng);
  const auto u = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(g.order())));
  std::vector<std::int64_t> f0(f1.size());
  for (std::int64_t x = 0; x < g.order(); ++x) {
    f0[static_cast<std::size_t>(x)] = f1[static_cast<std::size_t>(g.mul(x, u))];
  }
  return PairOracle(g, std::move(f0), std::move(f1), universe);
}

PairOracle sample_independent_pair(const Group& g, RngStream& rng) {
  if (!g.is_abelian()) throw std::invalid_argument("lower-bound instances use Abelian groups");
  const std::int64_t universe = cube_universe(g);
  auto f0 = random_table(g, universe, rng);
  auto f1 = random_table(g, universe, rng);
  return PairOracle(g, std::move(f0), std::move(f1), universe);
}

FunctionOracle perturb_to_distance(const FunctionOracle& f, double d, RngStream& rng) {
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("target distance must be in [0,1]");
  const Group& g = f.domain();
  const auto changes = static_cast<std::int64_t>(d * static_cast<double>(g.order()));
  std::vector<std::int64_t> table = f.table();
  // partial Fisher-Yates: pick `changes` distinct points
  std::vector<std::int64_t> points(table.size());
  std::iota(points.begin(), points.end(), 0);
  std::int64_t universe = f.value_universe();
  for (std::int64_t i = 0; i < changes; ++i) {
    const auto j = i + static_cast<std::int64_t>(rng.next_below(
                           static_cast<std::uint64_t>(points.size()) - static_cast<std::uint64_t>(i)));
    std::swap(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    table[static_cast<std::size_t>(points[static_cast<std::size_t>(i)])] = universe++;
  }
  return FunctionOracle(g, std::move(table), universe);
}

std::vector<std::int64_t> majority_correction(const Group& g,
                                              const std::vector<std::int64_t>& table,
                                              const Subgroup& h) {
  const CosetAverages mu = coset_averages(g, table, h);
  std::vector<std::int64_t> winner(mu.counts.size());
  for (std::size_t c = 0; c < mu.counts.size(); ++c) {
    std::int64_t best_value = -1, best_count = -1;
    for (const auto& [value, count] : mu.counts[c]) {
      if (count > best_count) {  // rows are value-sorted, so first max wins ties
        best_count = count;
        best_value = value;
      }
    }
    winner[c] = best_value;
  }
  std::vector<std::int64_t> out(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    out[x] = winner[static_cast<std::size_t>(mu.cosets.coset_of[x])];
  }
  return out;
}

Rational dist_to_per(const FunctionOracle& f, const Subgroup& h) {
  const Group& g = f.domain();
  const CosetAverages mu = coset_averages(g, f.table(), h);
  std::int64_t changed = 0;
  for (const auto& row : mu.counts) {
    std::int64_t best = 0;
    for (const auto& [value, count] : row) best = std::max(best, count);
    changed += h.order() - best;
  }
  return Rational(changed, g.order());
}

std::optional<Rational> dist_to_larger_period(const FunctionOracle& f, const Subgroup& k) {
  const Group& g = f.domain();
  const auto overgroups = minimal_overgroups(g, k);
  if (overgroups.empty()) return std::nullopt;
  std::optional<Rational> best;
  for (const auto& h : overgroups) {
    const Rational d = dist_to_per(f, h);
    if (!best || d < *best) best = d;
  }
  return best;
}

Rational dist_to_range(const PairOracle& f, const Subgroup& h) {
  const Group& g = f.domain();
  const CosetAverages mu0 = coset_averages(g, f.table(0), h);
  const CosetAverages mu1 = coset_averages(g, f.table(1), h);
  std::int64_t l1 = 0;
  for (std::size_t c = 0; c < mu0.counts.size(); ++c) {
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
      l1 += std::abs(m0 - m1);
    }
  }
  return Rational(l1, 4 * g.order());
}

Rational dist_to_ccr(const PairOracle& f, std::int64_t k, std::int64_t t,
                     std::int64_t tuple_budget) {
  const Group& g = f.domain();
  const auto subgroups = t_generated_normal_subgroups(g, k, t, tuple_budget);
  Rational best(1, 1);
  bool first = true;
  for (const auto& h : subgroups) {
    const Rational d = dist_to_range(f, h);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

}  // namespace hgt
