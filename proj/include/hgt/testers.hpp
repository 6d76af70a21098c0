#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgt/irrep.hpp"
#include "hgt/oracle.hpp"
#include "hgt/qsim.hpp"
#include "hgt/subgroup.hpp"

namespace hgt {

// delta in (0,1); K for the period tests, (k, t) for the coset-range test
// with 1 <= t <= log2(k) (t = 1 allowed when k = 1).
struct TesterParams {
  double delta = 0.1;
  Subgroup base;  // K
  std::int64_t k = 1;
  std::int64_t t = 1;
  std::int64_t tuple_budget = kDefaultTupleBudget;

  void validate_period(const Group& g) const;
  void validate_ccr(const Group& g) const;
};

// N <- ceil(4 * log2(|G|) / delta) resp. ceil(2 k t log2(|G|) / delta).
std::int64_t period_sample_count(std::int64_t order, double delta);
std::int64_t ccr_sample_count(std::int64_t order, std::int64_t k, std::int64_t t,
                              double delta);

// Full tester transcript. One oracle query is charged per sampling run, so
// queries_used always equals the sample count.
struct Verdict {
  bool accepted = false;
  OutcomeSpace space = OutcomeSpace::AbelianCharacters;
  std::vector<std::int64_t> samples;  // outcome codes in draw order
  std::int64_t sample_count = 0;
  std::int64_t queries_used = 0;
  std::uint64_t seed = 0;
  std::optional<Subgroup> witness;  // the H found by the acceptance search
};

// Acceptance predicates, separated from sampling so they can be unit-tested
// on synthetic transcripts.
bool accept_check_period(const Group& g, const std::vector<std::int64_t>& samples,
                         const Subgroup& k);
bool accept_check_period_general(const Group& g, const std::vector<Irrep>& reps,
                                 const std::vector<std::int64_t>& samples,
                                 const Subgroup& k);
std::optional<Subgroup> accept_check_ccr(const Group& g,
                                         const std::vector<Irrep>* reps,
                                         const std::vector<std::int64_t>& samples,
                                         std::int64_t k, std::int64_t t,
                                         std::int64_t tuple_budget = kDefaultTupleBudget);

// Accept iff the sampled characters generate a strict subgroup of K^perp.
// When no subgroup strictly above K exists (|G| = 1 or K = G) the property
// is empty and the tester rejects immediately with zero samples.
Verdict test_larger_period(const FunctionOracle& f, const TesterParams& params,
                           std::uint64_t seed);

// Accept iff the intersection of the sampled irrep kernels strictly
// contains K.
Verdict test_larger_period_general(const FunctionOracle& f, const TesterParams& params,
                                   std::uint64_t seed);

// Accept iff some admissible H (normal, order <= k, t-generated) has no
// sampled (rho, 1) with rho trivial on H; the witness is the first such H
// in canonical order.
Verdict test_common_coset_range(const PairOracle& f, const TesterParams& params,
                                std::uint64_t seed);

// Support certificates: a positive instance whose observation support
// satisfies the acceptance condition for a known H is accepted with
// probability exactly 1, for every seed.
bool certify_period_accepts(const FunctionOracle& f, const Subgroup& h,
                            const Subgroup& k);
bool certify_period_general_accepts(const FunctionOracle& f,
                                    const std::vector<Irrep>& reps,
                                    const Subgroup& h, const Subgroup& k);
bool certify_ccr_accepts(const PairOracle& f, const Subgroup& h, std::int64_t k,
                         std::int64_t t,
                         std::int64_t tuple_budget = kDefaultTupleBudget);

}  // namespace hgt
