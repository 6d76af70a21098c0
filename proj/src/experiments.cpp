#include "hgt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgt {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kAgreementTol = 1e-12;

struct CheckAccumulator {
  CheckResult r;
  explicit CheckAccumulator(std::string name, double tol) {
    r.name = std::move(name);
    r.tolerance = tol;
  }
  void feed(double dev) {
    r.max_deviation = std::max(r.max_deviation, dev);
    ++r.cases;
  }
  CheckResult done() {
    r.pass = r.max_deviation <= r.tolerance;
    return r;
  }
};

// || |f> - |g> ||^2 evaluated in floating point from the explicit
// superposition vectors; the exact-rational route must match it.
double superposition_gap_sq(const Group& g, const std::vector<std::int64_t>& f,
                            const std::vector<std::int64_t>& h) {
  double acc = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] != h[x]) acc += 2.0;
  }
  return acc / static_cast<double>(g.order());
}

Rational table_distance(const std::vector<std::int64_t>& f,
                        const std::vector<std::int64_t>& h) {
  std::int64_t diff = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] != h[x]) ++diff;
  }
  return Rational(diff, static_cast<std::int64_t>(f.size()));
}

}  // namespace

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

IdentityReport run_identity_suite(const Group& g, std::int64_t trials,
                                  std::uint64_t seed) {
  if (g.order() > 64) {
    throw std::invalid_argument(
        "identity suite walks the subgroup lattice; use groups of order <= 64");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  IdentityReport report;
  report.group = g.to_string();
  report.trials = trials;
  report.seed = seed;

  const auto subgroups = all_subgroups(g);
  std::vector<Subgroup> normal_subgroups;
  for (const auto& h : subgroups) {
    if (h.normal) normal_subgroups.push_back(h);
  }
  const auto reps = irrep_table(g);
  const std::int64_t values = 5;
  std::uint64_t stream = 0;
  auto next_rng = [&] { return RngStream::substream(seed, stream++); };

  CheckAccumulator state_distance("state-distance-identity", kIdentityTol);
  CheckAccumulator defect_mass("defect-offsupport-identity", kIdentityTol);
  CheckAccumulator majority("majority-correction-bound", 0.0);
  CheckAccumulator coset_map("coset-state-map", kIdentityTol);
  // the right-hand side is a floating-point mass, so the bound checks carry
  // the identity tolerance rather than an exact-zero slack
  CheckAccumulator pair_bound("pair-histogram-bound", kIdentityTol);
  CheckAccumulator pair_identity("pair-defect-identity", kIdentityTol);
  CheckAccumulator normalization("distribution-normalization", kIdentityTol);
  CheckAccumulator plancherel("plancherel-injective-weights", kAgreementTol);

  for (std::int64_t i = 0; i < trials; ++i) {
    auto rng = next_rng();
    const FunctionOracle f = random_function(g, values, rng);
    const FunctionOracle h = random_function(g, values, rng);
    const Rational d = table_distance(f.table(), h.table());
    state_distance.feed(std::abs(d.to_double() -
                                 0.5 * superposition_gap_sq(g, f.table(), h.table())));

    const SamplingDistribution dist =
        g.is_abelian() ? fourier_distribution(f) : fourier_distribution_general(reps, f);
    double total = 0.0;
    for (double p : dist.prob) total += p;
    normalization.feed(std::abs(total - 1.0));

    for (const auto& sub : normal_subgroups) {
      const double off = g.is_abelian()
                             ? mass_outside_orthogonal(g, dist, sub)
                             : mass_outside_orthogonal_general(reps, dist, sub);
      defect_mass.feed(std::abs(state_defect(f, sub).to_double() - off));
      const Rational slack = dist_to_per(f, sub) - Rational(2) * state_defect(f, sub);
      majority.feed(std::max(0.0, slack.to_double()));
    }
  }

  if (g.is_abelian()) {
    CheckAccumulator agreement("character-irrep-agreement", kAgreementTol);
    for (std::int64_t i = 0; i < std::min<std::int64_t>(trials, 10); ++i) {
      auto rng = next_rng();
      const FunctionOracle f = random_function(g, values, rng);
      const SamplingDistribution a = fourier_distribution(f);
      const SamplingDistribution b = fourier_distribution_general(reps, f);
      for (std::size_t y = 0; y < a.prob.size(); ++y) {
        agreement.feed(std::abs(a.prob[y] - b.prob[y]));
      }
    }
    report.checks.push_back(agreement.done());
  }

  {
    const FunctionOracle f = injective_oracle(g);
    const SamplingDistribution dist = fourier_distribution_general(reps, f);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const double expect = static_cast<double>(reps[r].dim() * reps[r].dim()) /
                            static_cast<double>(g.order());
      plancherel.feed(std::abs(dist.prob[r] - expect));
    }
  }

  for (const auto& sub : normal_subgroups) {
    for (std::int64_t x = 0; x < g.order(); ++x) {
      if (g.is_abelian()) {
        coset_map.feed(max_abs_diff(qft_coset_state(g, x, sub),
                                    orthogonal_coset_state(g, x, sub)));
      } else {
        coset_map.feed(max_abs_diff(qft_coset_state_general(g, reps, x, sub),
                                    orthogonal_coset_state_general(g, reps, x, sub)));
      }
    }
  }

  for (std::int64_t i = 0; i < trials; ++i) {
    auto rng = next_rng();
    const PairOracle pair = random_pair(g, values, rng);
    const SamplingDistribution dist = g.is_abelian()
                                          ? fourier_distribution_pair(pair)
                                          : fourier_distribution_pair_general(reps, pair);
    double total = 0.0;
    for (double p : dist.prob) total += p;
    normalization.feed(std::abs(total - 1.0));
    for (const auto& sub : normal_subgroups) {
      const double hit = g.is_abelian()
                             ? pair_mass_b1_inside_orthogonal(g, dist, sub)
                             : pair_mass_b1_inside_orthogonal_general(reps, dist, sub);
      const double slack =
          dist_to_range(pair, sub).to_double() - static_cast<double>(sub.order()) * hit;
      pair_bound.feed(std::max(0.0, slack));
      pair_identity.feed(std::abs(pair_defect(pair, sub).to_double() - 2.0 * hit));
    }
  }

  report.checks.push_back(state_distance.done());
  report.checks.push_back(defect_mass.done());
  report.checks.push_back(majority.done());
  report.checks.push_back(coset_map.done());
  report.checks.push_back(pair_bound.done());
  report.checks.push_back(pair_identity.done());
  report.checks.push_back(plancherel.done());
  report.checks.push_back(normalization.done());
  return report;
}

namespace {

struct PeriodInstance {
  FunctionOracle oracle;
  std::optional<Subgroup> known_period;
};

PeriodInstance make_period_instance(const Group& g, const PeriodRunConfig& cfg) {
  auto rng = RngStream::substream(cfg.seed, 0);
  if (cfg.instance == "periodic" || cfg.instance == "perturbed-periodic") {
    if (cfg.subgroup.empty()) {
      throw std::invalid_argument("periodic instances need a subgroup (--H gens=...)");
    }
    const Subgroup h = parse_subgroup(g, cfg.subgroup);
    FunctionOracle f = random_periodic(g, h, cfg.values, rng);
    if (cfg.instance == "perturbed-periodic") {
      auto rng2 = RngStream::substream(cfg.seed, 1);
      return {perturb_to_distance(f, cfg.perturb, rng2), std::nullopt};
    }
    return {std::move(f), h};
  }
  if (cfg.instance == "injective" || cfg.instance == "far-from-lp") {
    return {injective_oracle(g), std::nullopt};
  }
  throw std::invalid_argument("unknown period instance kind: " + cfg.instance);
}

}  // namespace

PeriodRunResult run_period_on(const PeriodRunConfig& cfg, const FunctionOracle& f,
                              const std::optional<Subgroup>& known_period) {
  const Group& g = f.domain();
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  TesterParams params;
  params.delta = cfg.delta;
  params.base = parse_subgroup(g, cfg.base.empty() ? "gens=" : cfg.base);

  PeriodRunResult result;
  const auto exact = dist_to_larger_period(f, params.base);
  result.distance = exact ? exact->str() : "inf";
  if (known_period) {
    if (cfg.general) {
      const auto reps = irrep_table(g);
      result.positive_certified =
          certify_period_general_accepts(f, reps, *known_period, params.base);
    } else {
      result.positive_certified =
          certify_period_accepts(f, *known_period, params.base);
    }
  }

  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t trial_seed = mix_seed(cfg.seed, 100 + static_cast<std::uint64_t>(i));
    Verdict v = cfg.general ? test_larger_period_general(f, params, trial_seed)
                            : test_larger_period(f, params, trial_seed);
    accepted += v.accepted ? 1 : 0;
    if (i == 0) result.queries_per_trial = v.queries_used;
    if (v.queries_used != result.queries_per_trial) {
      throw std::logic_error("query count varies across trials");
    }
    result.verdicts.push_back(std::move(v));
  }
  result.accept_rate = static_cast<double>(accepted) / static_cast<double>(cfg.trials);
  return result;
}

PeriodRunResult run_period(const PeriodRunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  PeriodInstance inst = make_period_instance(g, cfg);
  return run_period_on(cfg, inst.oracle, inst.known_period);
}

namespace {

struct CcrInstance {
  PairOracle oracle;
  std::optional<Subgroup> similar;
};

CcrInstance make_ccr_instance(const Group& g, const CcrRunConfig& cfg) {
  auto rng = RngStream::substream(cfg.seed, 0);
  if (cfg.instance == "hidden-translation") {
    if (cfg.translation.empty()) {
      throw std::invalid_argument("hidden-translation instances need --u (coords)");
    }
    const std::int64_t u = g.parse_element(cfg.translation);
    PairOracle pair = hidden_translation_pair(g, u, cfg.values, rng);
    return {std::move(pair), subgroup_close(g, {u})};
  }
  if (cfg.instance == "disjoint-range") {
    return {disjoint_range_pair(g), std::nullopt};
  }
  if (cfg.instance == "d1") {
    const auto u = static_cast<std::int64_t>(
        rng.next_below(static_cast<std::uint64_t>(g.order())));
    const std::int64_t n = g.order();
    PairOracle pair = hidden_translation_pair(g, u, n * n * n, rng);
    return {std::move(pair), subgroup_close(g, {u})};
  }
  if (cfg.instance == "d2") {
    return {sample_independent_pair(g, rng), std::nullopt};
  }
  throw std::invalid_argument("unknown coset-range instance kind: " + cfg.instance);
}

}  // namespace

CcrRunResult run_ccr_on(const CcrRunConfig& cfg, const PairOracle& f,
                        const std::optional<Subgroup>& similar) {
  const Group& g = f.domain();
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  TesterParams params;
  params.delta = cfg.delta;
  params.k = cfg.k;
  params.t = cfg.t;
  params.tuple_budget = cfg.tuple_budget;
  params.validate_ccr(g);

  CcrRunResult result;
  result.distance = dist_to_ccr(f, cfg.k, cfg.t, cfg.tuple_budget).str();
  if (similar) {
    result.positive_certified =
        certify_ccr_accepts(f, *similar, cfg.k, cfg.t, cfg.tuple_budget);
  }

  std::int64_t accepted = 0;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t trial_seed = mix_seed(cfg.seed, 100 + static_cast<std::uint64_t>(i));
    Verdict v = test_common_coset_range(f, params, trial_seed);
    accepted += v.accepted ? 1 : 0;
    if (i == 0) result.queries_per_trial = v.queries_used;
    if (v.queries_used != result.queries_per_trial) {
      throw std::logic_error("query count varies across trials");
    }
    result.verdicts.push_back(std::move(v));
  }
  result.accept_rate = static_cast<double>(accepted) / static_cast<double>(cfg.trials);
  return result;
}

CcrRunResult run_ccr(const CcrRunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  CcrInstance inst = make_ccr_instance(g, cfg);
  return run_ccr_on(cfg, inst.oracle, inst.similar);
}

WilsonInterval wilson95(std::int64_t successes, std::int64_t n) {
  if (n <= 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double center = (phat + z2 / (2.0 * nn)) / (1.0 + z2 / nn);
  const double half = z *
                      std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) /
                      (1.0 + z2 / nn);
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

bool cross_collision(const PairOracle& f, std::int64_t q, RngStream& rng) {
  const Group& g = f.domain();
  const std::int64_t q0 = (q + 1) / 2;
  const std::int64_t q1 = q / 2;
  std::vector<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(q0));
  for (std::int64_t i = 0; i < q0; ++i) {
    const auto x = static_cast<std::int64_t>(
        rng.next_below(static_cast<std::uint64_t>(g.order())));
    seen.push_back(f(0, x));
  }
  std::sort(seen.begin(), seen.end());
  for (std::int64_t i = 0; i < q1; ++i) {
    const auto y = static_cast<std::int64_t>(
        rng.next_below(static_cast<std::uint64_t>(g.order())));
    if (std::binary_search(seen.begin(), seen.end(), f(1, y))) return true;
  }
  return false;
}

LowerBoundReport run_lowerbound(const std::string& group_text, std::int64_t q,
                                std::int64_t trials, std::uint64_t seed) {
  const Group g = parse_group(group_text);
  if (!g.is_abelian()) {
    throw std::invalid_argument("the lower-bound experiment runs on Abelian groups");
  }
  if (q < 0) throw std::invalid_argument("query budget must be non-negative");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  LowerBoundReport report;
  report.group = g.to_string();
  report.order = g.order();
  report.queries = q;
  report.trials = trials;
  report.seed = seed;

  std::int64_t hits1 = 0, hits2 = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    auto rng1 = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i));
    const PairOracle pos = sample_translated_pair(g, rng1);
    if (cross_collision(pos, q, rng1)) ++hits1;

    auto rng2 = RngStream::substream(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    const PairOracle neg = sample_independent_pair(g, rng2);
    if (cross_collision(neg, q, rng2)) ++hits2;
  }
  report.p1 = static_cast<double>(hits1) / static_cast<double>(trials);
  report.p2 = static_cast<double>(hits2) / static_cast<double>(trials);
  report.advantage = std::abs(report.p1 - report.p2);
  report.interval1 = wilson95(hits1, trials);
  report.interval2 = wilson95(hits2, trials);
  return report;
}

}  // namespace hgt
