#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgt/gen.hpp"
#include "hgt/testers.hpp"

namespace hgt {

// ---- identity verification suite ------------------------------------------

struct CheckResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::int64_t cases = 0;
  bool pass = false;
};

struct IdentityReport {
  std::string group;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Machine-checks the exact identities and robustness bounds the simulator
// guarantees (defect vs off-support mass, majority-correction bound, coset
// state mapping, pair histogram bound, Plancherel weights, normalization,
// character/irrep agreement). Walks the full subgroup lattice, so the group
// order is capped at 64.
IdentityReport run_identity_suite(const Group& g, std::int64_t trials,
                                  std::uint64_t seed);

// ---- tester experiments ----------------------------------------------------

struct PeriodRunConfig {
  std::string group;
  bool general = false;             // irrep-label tester instead of characters
  double delta = 0.1;
  std::string base = "gens=";       // K
  std::string instance = "periodic";  // periodic | injective | perturbed-periodic
  std::string subgroup;             // H ("gens=...") for the periodic kinds
  double perturb = 0.0;
  std::int64_t values = 5;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
};

struct PeriodRunResult {
  std::vector<Verdict> verdicts;
  std::string distance;             // exact rational, or "inf" when K = G
  bool positive_certified = false;  // support check proves acceptance
  double accept_rate = 0.0;
  std::int64_t queries_per_trial = 0;
};

PeriodRunResult run_period(const PeriodRunConfig& cfg);

// Same tester loop on a preloaded oracle (instance replay); known_period, if
// given, enables the completeness certificate.
PeriodRunResult run_period_on(const PeriodRunConfig& cfg, const FunctionOracle& f,
                              const std::optional<Subgroup>& known_period);

struct CcrRunConfig {
  std::string group;
  double delta = 0.1;
  std::int64_t k = 1;
  std::int64_t t = 1;
  std::string instance = "hidden-translation";  // | disjoint-range | d1 | d2
  std::string translation;  // u as "(coords)" for hidden-translation
  std::int64_t values = 5;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::int64_t tuple_budget = kDefaultTupleBudget;
};

struct CcrRunResult {
  std::vector<Verdict> verdicts;
  std::string distance;
  bool positive_certified = false;
  double accept_rate = 0.0;
  std::int64_t queries_per_trial = 0;
};

CcrRunResult run_ccr(const CcrRunConfig& cfg);

CcrRunResult run_ccr_on(const CcrRunConfig& cfg, const PairOracle& f,
                        const std::optional<Subgroup>& similar);

// ---- classical lower-bound experiment --------------------------------------

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// 95% score interval for successes out of n.
WilsonInterval wilson95(std::int64_t successes, std::int64_t n);

struct LowerBoundReport {
  std::string group;
  std::int64_t order = 0;
  std::int64_t queries = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double p1 = 0.0;  // accept rate on translated pairs
  double p2 = 0.0;  // accept rate on independent pairs
  double advantage = 0.0;
  WilsonInterval interval1;
  WilsonInterval interval2;
};

// The natural classical distinguisher: query f0 at ceil(q/2) and f1 at
// floor(q/2) uniform points and answer "translated" iff a cross-collision
// f0(x) = f1(y) shows up.
bool cross_collision(const PairOracle& f, std::int64_t q, RngStream& rng);

LowerBoundReport run_lowerbound(const std::string& group_text, std::int64_t q,
                                std::int64_t trials, std::uint64_t seed);

}  // namespace hgt
