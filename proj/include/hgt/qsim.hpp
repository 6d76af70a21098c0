#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hgt/irrep.hpp"
#include "hgt/oracle.hpp"
#include "hgt/rational.hpp"
#include "hgt/rng.hpp"
#include "hgt/subgroup.hpp"

namespace hgt {

// What the outcome codes of a sampling distribution index:
//   AbelianCharacters: code = character label y
//   IrrepLabels:       code = position in the irrep table
//   Pair*:             code = 2 * (label or position) + b
enum class OutcomeSpace : std::uint8_t {
  AbelianCharacters,
  IrrepLabels,
  PairCharacters,
  PairIrrepLabels,
};

// Exact observation distribution of one Fourier-sampling run, in canonical
// outcome order. Probabilities sum to 1 within 1e-9; entries below 1e-12
// are treated as zero when reading off the support.
struct SamplingDistribution {
  OutcomeSpace space = OutcomeSpace::AbelianCharacters;
  std::vector<double> prob;

  static constexpr double kSupportEps = 1e-12;
  static constexpr double kSumTol = 1e-9;

  std::vector<std::int64_t> support() const;
  void check_normalized() const;  // throws std::logic_error on violation
};

// Pr[y] = (1/|G|^2) sum_s |sum_{x in f^-1(s)} chi_y(x)|^2. Abelian kind only.
SamplingDistribution fourier_distribution(const FunctionOracle& f);

// Pr[rho] = (d_rho/|G|^2) sum_s sum_{i,j} |sum_{x in f^-1(s)} rho(x)_{i,j}|^2,
// the (i,j)-marginal of observing the representation register only.
SamplingDistribution fourier_distribution_general(const std::vector<Irrep>& reps,
                                                  const FunctionOracle& f);

// Distribution over (y, b) resp. (rho, b) for the product group G x Z2 with
// f(x, b) = f_b(x).
SamplingDistribution fourier_distribution_pair(const PairOracle& f);
SamplingDistribution fourier_distribution_pair_general(const std::vector<Irrep>& reps,
                                                       const PairOracle& f);

// n i.i.d. draws by inverse CDF over the canonical outcome order.
std::vector<std::int64_t> sample(const SamplingDistribution& d, RngStream& rng,
                                 std::int64_t n);
std::int64_t sample_one(const SamplingDistribution& d, RngStream& rng);

// Per-element value distribution obtained by averaging f over cosets of H:
// the weight of value s at x is count(s on xH) / |H|. H-periodic by
// construction; multiplicities are the integer counts themselves.
struct CosetAverages {
  CosetTable cosets;
  std::int64_t subgroup_order = 1;
  // per coset: (value, multiplicity), sorted by value
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> counts;

  std::int64_t multiplicity(std::int64_t coset, std::int64_t value) const;
  Rational weight(std::int64_t x, std::int64_t value) const;
};

CosetAverages coset_averages(const Group& g, const std::vector<std::int64_t>& table,
                             const Subgroup& h);

// || |f> - |mu^{f,H}> ||^2, computed exactly from the table.
Rational state_defect(const FunctionOracle& f, const Subgroup& h);

// || (1/sqrt2)(|mu^{f0,H}> - |mu^{f1,H}>) ||^2, exact.
Rational pair_defect(const PairOracle& f, const Subgroup& h);

// Membership of an outcome in H^perp.
bool char_trivial_on(const Group& g, std::int64_t y, const Subgroup& h);

// Pr[outcome outside H^perp] for single-function distributions.
double mass_outside_orthogonal(const Group& g, const SamplingDistribution& d,
                               const Subgroup& h);
double mass_outside_orthogonal_general(const std::vector<Irrep>& reps,
                                       const SamplingDistribution& d,
                                       const Subgroup& h);

// Pr[(rho, 1) with rho in H^perp] for pair distributions.
double pair_mass_b1_inside_orthogonal(const Group& g, const SamplingDistribution& d,
                                      const Subgroup& h);
double pair_mass_b1_inside_orthogonal_general(const std::vector<Irrep>& reps,
                                              const SamplingDistribution& d,
                                              const Subgroup& h);

// State vector in the Fourier output basis: y-indexed amplitudes for the
// Abelian kind, concatenated row-major d^2 blocks per irrep otherwise.
struct QftState {
  std::vector<std::complex<double>> amp;
  std::vector<std::size_t> offset;  // block offsets (general case)
};

// QFT applied to the uniform superposition on the coset xH, by explicit
// matrix application.
QftState qft_coset_state(const Group& g, std::int64_t x, const Subgroup& h);
QftState qft_coset_state_general(const Group& g, const std::vector<Irrep>& reps,
                                 std::int64_t x, const Subgroup& h);

// The closed-form image sqrt(|H|/|G|) sum_{rho in H^perp} |rho(x)>.
QftState orthogonal_coset_state(const Group& g, std::int64_t x, const Subgroup& h);
QftState orthogonal_coset_state_general(const Group& g, const std::vector<Irrep>& reps,
                                        std::int64_t x, const Subgroup& h);

double max_abs_diff(const QftState& a, const QftState& b);

}  // namespace hgt
