#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgt/oracle.hpp"
#include "hgt/qsim.hpp"
#include "hgt/rational.hpp"
#include "hgt/rng.hpp"
#include "hgt/subgroup.hpp"

namespace hgt {

// ---- generators ----------------------------------------------------------

FunctionOracle random_function(const Group& g, std::int64_t value_count, RngStream& rng);

// Uniformly random value per coset of H; H-periodic by construction.
FunctionOracle random_periodic(const Group& g, const Subgroup& h,
                               std::int64_t value_count, RngStream& rng);

// f(x) = x; the canonical instance far from every enlarged period.
FunctionOracle injective_oracle(const Group& g);

// Random f1 with f0(x) = f1(x * u); the pair is <u>-similar.
PairOracle hidden_translation_pair(const Group& g, std::int64_t u,
                                   std::int64_t value_count, RngStream& rng);

PairOracle random_pair(const Group& g, std::int64_t value_count, RngStream& rng);

// Injective pair with disjoint ranges; at histogram distance 1/2 from every
// common-coset-range instance.
PairOracle disjoint_range_pair(const Group& g);

// The two instance distributions of the classical lower-bound experiment,
// over value labels drawn uniformly from a set of size |G|^3: a uniformly
// random translated pair, and two independent uniform functions.
PairOracle sample_translated_pair(const Group& g, RngStream& rng);  // D1
PairOracle sample_independent_pair(const Group& g, RngStream& rng); // D2

// Changes exactly floor(d * |G|) distinct points to fresh values (labels
// beyond the current universe). Callers re-measure the true distance.
FunctionOracle perturb_to_distance(const FunctionOracle& f, double d, RngStream& rng);

// ---- exact distance oracles ----------------------------------------------

// The nearest H-periodic function: plurality value on each coset, ties
// resolved toward the smallest value label.
std::vector<std::int64_t> majority_correction(const Group& g,
                                              const std::vector<std::int64_t>& table,
                                              const Subgroup& h);

// dist(f, Per(H)), exact.
Rational dist_to_per(const FunctionOracle& f, const Subgroup& h);

// dist(f, LARGER-PERIOD(K)): minimum of dist_to_per over the overgroup
// family of K. Empty (K = G) yields nullopt, meaning "infinitely far".
std::optional<Rational> dist_to_larger_period(const FunctionOracle& f, const Subgroup& k);

// dist((f0,f1), Range(H)) on G x Z2: per-coset histogram L1 distance / 4|G|.
Rational dist_to_range(const PairOracle& f, const Subgroup& h);

// dist to CCR(k,t): minimum of dist_to_range over the admissible subgroups.
Rational dist_to_ccr(const PairOracle& f, std::int64_t k, std::int64_t t,
                     std::int64_t tuple_budget = kDefaultTupleBudget);

}  // namespace hgt
