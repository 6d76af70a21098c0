#include "hgt/testers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgt {

namespace {

std::int64_t floor_log2(std::int64_t v) {
  std::int64_t r = 0;
  while (v > 1) {
    v >>= 1;
    ++r;
  }
  return r;
}

}  // namespace

void TesterParams::validate_period(const Group& g) const {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
  if (!base.normal) throw std::invalid_argument("the known subgroup K must be normal");
  if (base.elems.empty() || base.elems.back() >= g.order()) {
    throw std::invalid_argument("K is not a subgroup of the given group");
  }
}

void TesterParams::validate_ccr(const Group& g) const {
  (void)g;
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (t < 1 || t > std::max<std::int64_t>(1, floor_log2(k))) {
    throw std::invalid_argument("t must satisfy 1 <= t <= log2(k)");
  }
}

std::int64_t period_sample_count(std::int64_t order, double delta) {
  return static_cast<std::int64_t>(
      std::ceil(4.0 * std::log2(static_cast<double>(order)) / delta));
}

std::int64_t ccr_sample_count(std::int64_t order, std::int64_t k, std::int64_t t,
                              double delta) {
  return static_cast<std::int64_t>(
      std::ceil(2.0 * static_cast<double>(k) * static_cast<double>(t) *
                std::log2(static_cast<double>(order)) / delta));
}

bool accept_check_period(const Group& g, const std::vector<std::int64_t>& samples,
                         const Subgroup& k) {
  const Subgroup generated = subgroup_close(g, samples);
  const Subgroup kperp = orthogonal(g, k);
  return kperp.contains_all(generated) && generated.order() < kperp.order();
}

bool accept_check_period_general(const Group& g, const std::vector<Irrep>& reps,
                                 const std::vector<std::int64_t>& samples,
                                 const Subgroup& k) {
  std::vector<std::int64_t> meet = full_subgroup(g).elems;
  for (std::int64_t pos : samples) {
    const auto& ker = reps.at(static_cast<std::size_t>(pos)).kernel().elems;
    std::vector<std::int64_t> next;
    std::set_intersection(meet.begin(), meet.end(), ker.begin(), ker.end(),
                          std::back_inserter(next));
    meet = std::move(next);
  }
  return std::includes(meet.begin(), meet.end(), k.elems.begin(), k.elems.end()) &&
         static_cast<std::int64_t>(meet.size()) > k.order();
}

std::optional<Subgroup> accept_check_ccr(const Group& g,
                                         const std::vector<Irrep>* reps,
                                         const std::vector<std::int64_t>& samples,
                                         std::int64_t k, std::int64_t t,
                                         std::int64_t tuple_budget) {
  // only samples with b = 1 constrain the choice of H
  std::vector<std::int64_t> killers;
  for (std::int64_t code : samples) {
    if (code % 2 == 1) killers.push_back(code / 2);
  }
  std::sort(killers.begin(), killers.end());
  killers.erase(std::unique(killers.begin(), killers.end()), killers.end());

  for (const Subgroup& h : t_generated_normal_subgroups(g, k, t, tuple_budget)) {
    bool ok = true;
    for (std::int64_t label : killers) {
      const bool in_perp = reps
                               ? (*reps)[static_cast<std::size_t>(label)].trivial_on(h)
                               : char_trivial_on(g, label, h);
      if (in_perp) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  return std::nullopt;
}

Verdict test_larger_period(const FunctionOracle& f, const TesterParams& params,
                           std::uint64_t seed) {
  const Group& g = f.domain();
  if (!g.is_abelian()) {
    throw std::invalid_argument("test_larger_period requires an Abelian group");
  }
  params.validate_period(g);
  Verdict v;
  v.space = OutcomeSpace::AbelianCharacters;
  v.seed = seed;
  if (g.order() == 1 || params.base.order() == g.order()) {
    return v;  // property empty: reject with zero samples
  }
  v.sample_count = period_sample_count(g.order(), params.delta);
  const SamplingDistribution dist = fourier_distribution(f);
  RngStream rng(seed);
  v.samples.reserve(static_cast<std::size_t>(v.sample_count));
  for (std::int64_t i = 0; i < v.sample_count; ++i) {
    f.charge_query();  // one oracle call per sampling run
    v.samples.push_back(sample_one(dist, rng));
  }
  v.queries_used = v.sample_count;
  v.accepted = accept_check_period(g, v.samples, params.base);
  return v;
}

Verdict test_larger_period_general(const FunctionOracle& f, const TesterParams& params,
                                   std::uint64_t seed) {
  const Group& g = f.domain();
  params.validate_period(g);
  Verdict v;
  v.space = OutcomeSpace::IrrepLabels;
  v.seed = seed;
  if (g.order() == 1 || params.base.order() == g.order()) {
    return v;
  }
  const auto reps = irrep_table(g);
  v.sample_count = period_sample_count(g.order(), params.delta);
  const SamplingDistribution dist = fourier_distribution_general(reps, f);
  RngStream rng(seed);
  v.samples.reserve(static_cast<std::size_t>(v.sample_count));
  for (std::int64_t i = 0; i < v.sample_count; ++i) {
    f.charge_query();
    v.samples.push_back(sample_one(dist, rng));
  }
  v.queries_used = v.sample_count;
  v.accepted = accept_check_period_general(g, reps, v.samples, params.base);
  return v;
}

Verdict test_common_coset_range(const PairOracle& f, const TesterParams& params,
                                std::uint64_t seed) {
  const Group& g = f.domain();
  params.validate_ccr(g);
  Verdict v;
  v.seed = seed;
  v.sample_count = ccr_sample_count(g.order(), params.k, params.t, params.delta);

  std::vector<Irrep> reps;
  SamplingDistribution dist;
  if (g.is_abelian()) {
    v.space = OutcomeSpace::PairCharacters;
    dist = fourier_distribution_pair(f);
  } else {
    v.space = OutcomeSpace::PairIrrepLabels;
    reps = irrep_table(g);
    dist = fourier_distribution_pair_general(reps, f);
  }
  RngStream rng(seed);
  v.samples.reserve(static_cast<std::size_t>(v.sample_count));
  for (std::int64_t i = 0; i < v.sample_count; ++i) {
    f.charge_query();
    v.samples.push_back(sample_one(dist, rng));
  }
  v.queries_used = v.sample_count;
  auto witness = accept_check_ccr(g, g.is_abelian() ? nullptr : &reps, v.samples,
                                  params.k, params.t, params.tuple_budget);
  v.accepted = witness.has_value();
  v.witness = std::move(witness);
  return v;
}

bool certify_period_accepts(const FunctionOracle& f, const Subgroup& h,
                            const Subgroup& k) {
  const Group& g = f.domain();
  if (!h.contains_all(k) || h.order() <= k.order()) return false;
  const SamplingDistribution dist = fourier_distribution(f);
  for (std::int64_t y : dist.support()) {
    if (!char_trivial_on(g, y, h)) return false;
  }
  // support inside H^perp < K^perp: every transcript generates a strict
  // subgroup of K^perp
  return true;
}

bool certify_period_general_accepts(const FunctionOracle& f,
                                    const std::vector<Irrep>& reps,
                                    const Subgroup& h, const Subgroup& k) {
  if (!h.normal || !h.contains_all(k) || h.order() <= k.order()) return false;
  const SamplingDistribution dist = fourier_distribution_general(reps, f);
  for (std::int64_t pos : dist.support()) {
    if (!reps[static_cast<std::size_t>(pos)].trivial_on(h)) return false;
  }
  // every sampled kernel then contains H, so the kernel meet exceeds K
  return true;
}

bool certify_ccr_accepts(const PairOracle& f, const Subgroup& h, std::int64_t k,
                         std::int64_t t, std::int64_t tuple_budget) {
  const Group& g = f.domain();
  if (!h.normal || h.order() > k) return false;
  bool enumerated = false;
  for (const Subgroup& cand : t_generated_normal_subgroups(g, k, t, tuple_budget)) {
    if (cand.same_as(h)) {
      enumerated = true;
      break;
    }
  }
  if (!enumerated) return false;
  std::vector<Irrep> reps;
  SamplingDistribution dist;
  if (g.is_abelian()) {
    dist = fourier_distribution_pair(f);
  } else {
    reps = irrep_table(g);
    dist = fourier_distribution_pair_general(reps, f);
  }
  for (std::int64_t code : dist.support()) {
    if (code % 2 == 0) continue;
    const std::int64_t label = code / 2;
    const bool in_perp = g.is_abelian()
                             ? char_trivial_on(g, label, h)
                             : reps[static_cast<std::size_t>(label)].trivial_on(h);
    if (in_perp) return false;  // a (rho,1) outcome could rule H out
  }
  return true;
}

}  // namespace hgt
