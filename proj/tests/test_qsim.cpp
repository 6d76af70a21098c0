#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hgt/gen.hpp"
#include "hgt/qsim.hpp"

using namespace hgt;

namespace {

FunctionOracle table_oracle(const Group& g, std::vector<std::int64_t> t,
                            std::int64_t values) {
  return FunctionOracle(g, std::move(t), values);
}

double total_mass(const SamplingDistribution& d) {
  double s = 0.0;
  for (double p : d.prob) s += p;
  return s;
}

}  // namespace

TEST_CASE("character sampling distribution on tiny groups") {
  const Group z2 = Group::abelian({2});

  const auto constant = fourier_distribution(table_oracle(z2, {0, 0}, 1));
  CHECK(constant.prob[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(constant.prob[1] == doctest::Approx(0.0).epsilon(1e-12));

  const auto injective = fourier_distribution(table_oracle(z2, {0, 1}, 2));
  CHECK(injective.prob[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(injective.prob[1] == doctest::Approx(0.5).epsilon(1e-12));

  const Group z4 = Group::abelian({4});
  const auto periodic = fourier_distribution(table_oracle(z4, {0, 1, 0, 1}, 2));
  CHECK(periodic.support() == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("irrep sampling distribution") {
  const Group d4 = Group::dihedral(4);
  const auto reps = irrep_table(d4);

  const auto constant =
      fourier_distribution_general(reps, table_oracle(d4, std::vector<std::int64_t>(8, 0), 1));
  CHECK(constant.prob[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t r = 1; r < constant.prob.size(); ++r) {
    CHECK(constant.prob[r] == doctest::Approx(0.0).epsilon(1e-12));
  }

  // injective function: Plancherel weights d^2/|G| = (1/8,1/8,1/8,1/8,1/2)
  const auto plancherel = fourier_distribution_general(reps, injective_oracle(d4));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const double expect =
        static_cast<double>(reps[r].dim() * reps[r].dim()) / 8.0;
    CHECK(plancherel.prob[r] == doctest::Approx(expect).epsilon(1e-12));
  }

  // Abelian groups: both routes agree entrywise
  const Group z12 = Group::abelian({12});
  auto rng = RngStream(5);
  for (int i = 0; i < 20; ++i) {
    const FunctionOracle f = random_function(z12, 5, rng);
    const auto a = fourier_distribution(f);
    const auto b = fourier_distribution_general(irrep_table(z12), f);
    REQUIRE(a.prob.size() == b.prob.size());
    for (std::size_t y = 0; y < a.prob.size(); ++y) {
      CHECK(std::abs(a.prob[y] - b.prob[y]) <= 1e-12);
    }
  }
}

TEST_CASE("pair sampling distribution") {
  const Group z2 = Group::abelian({2});

  // equal halves: every (y,1) outcome has zero mass
  const PairOracle equal(z2, {0, 1}, {0, 1}, 2);
  const auto d_eq = fourier_distribution_pair(equal);
  CHECK(d_eq.prob[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d_eq.prob[3] == doctest::Approx(0.0).epsilon(1e-12));

  // translated by u=1: hand-expanded amplitudes give Pr[(0,0)]=Pr[(1,1)]=1/2
  const PairOracle translated(z2, {0, 1}, {1, 0}, 2);
  const auto d_tr = fourier_distribution_pair(translated);
  CHECK(d_tr.prob[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d_tr.prob[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d_tr.prob[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d_tr.prob[3] == doctest::Approx(0.5).epsilon(1e-12));

  // disjoint constants: Pr[(0,1)] = 1/2 by direct expansion
  const PairOracle disjoint(z2, {0, 0}, {1, 1}, 2);
  const auto d_dis = fourier_distribution_pair(disjoint);
  CHECK(d_dis.prob[1] == doctest::Approx(0.5).epsilon(1e-12));

  // general route agrees with the character route on Abelian groups
  const Group z8 = Group::abelian({8});
  auto rng = RngStream(11);
  for (int i = 0; i < 10; ++i) {
    const PairOracle pair = random_pair(z8, 4, rng);
    const auto a = fourier_distribution_pair(pair);
    const auto b = fourier_distribution_pair_general(irrep_table(z8), pair);
    for (std::size_t c = 0; c < a.prob.size(); ++c) {
      CHECK(std::abs(a.prob[c] - b.prob[c]) <= 1e-12);
    }
  }

  CHECK(total_mass(d_eq) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(total_mass(d_tr) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("seeded sampling") {
  const Group z4 = Group::abelian({4});
  SamplingDistribution point;
  point.space = OutcomeSpace::AbelianCharacters;
  point.prob = {0.0, 1.0, 0.0, 0.0};

  RngStream rng(3);
  const auto draws = sample(point, rng, 5);
  CHECK(draws == std::vector<std::int64_t>(5, 1));

  RngStream rng2(3);
  CHECK(sample(point, rng2, 0).empty());

  // empirical frequencies of 10^4 draws stay within 3 sigma of the exact
  // probabilities
  const auto dist = fourier_distribution(table_oracle(z4, {0, 1, 0, 2}, 3));
  RngStream rng3(7);
  const auto many = sample(dist, rng3, 10000);
  std::vector<std::int64_t> counts(4, 0);
  for (std::int64_t c : many) counts[static_cast<std::size_t>(c)]++;
  for (std::size_t y = 0; y < 4; ++y) {
    const double p = dist.prob[y];
    const double sigma = std::sqrt(p * (1.0 - p) / 10000.0);
    CHECK(std::abs(static_cast<double>(counts[y]) / 10000.0 - p) <= 3.0 * sigma + 1e-9);
  }

  // identical seeds reproduce draws exactly
  RngStream ra(99), rb(99);
  CHECK(sample(dist, ra, 100) == sample(dist, rb, 100));
}

TEST_CASE("query accounting") {
  const Group z4 = Group::abelian({4});
  const FunctionOracle f = table_oracle(z4, {0, 1, 0, 1}, 2);
  CHECK(f.queries() == 0);
  (void)f(2);
  CHECK(f.queries() == 1);
  const auto dist = fourier_distribution(f);
  CHECK(f.queries() == 1);  // simulation sweeps are bookkept separately
  CHECK(f.simulation_reads() == 4);
  f.charge_query();
  CHECK(f.queries() == 2);
  (void)dist;
}

TEST_CASE("coset averages") {
  const Group z12 = Group::abelian({12});
  auto rng = RngStream(61);
  const FunctionOracle f = random_function(z12, 4, rng);
  for (const Subgroup& h : all_subgroups(z12)) {
    const CosetAverages mu = coset_averages(z12, f.table(), h);
    // weights at each point sum to 1 (multiplicities sum to |H|)
    for (const auto& row : mu.counts) {
      std::int64_t total = 0;
      for (const auto& [value, count] : row) total += count;
      CHECK(total == h.order());
    }
    // H-periodicity: the weight of any value is constant along each coset
    for (std::int64_t x = 0; x < z12.order(); ++x) {
      for (std::int64_t e : h.elems) {
        for (std::int64_t s = 0; s < 4; ++s) {
          CHECK(mu.weight(x, s) == mu.weight(z12.mul(x, e), s));
        }
      }
    }
    // deterministic functions are the point-mass special case
    const CosetAverages delta = coset_averages(z12, f.table(), trivial_subgroup(z12));
    for (std::int64_t x = 0; x < z12.order(); ++x) {
      CHECK(delta.weight(x, f.table()[static_cast<std::size_t>(x)]) == Rational(1));
    }
  }
}

TEST_CASE("state defect") {
  const Group z12 = Group::abelian({12});
  auto rng = RngStream(21);

  // H-periodic functions have zero defect
  const Subgroup h4 = subgroup_close(z12, {4});
  const FunctionOracle periodic = random_periodic(z12, h4, 5, rng);
  CHECK(state_defect(periodic, h4) == Rational(0));

  // |G|=2, H=G, injective: defect 1/2 by direct arithmetic
  const Group z2 = Group::abelian({2});
  CHECK(state_defect(table_oracle(z2, {0, 1}, 2), full_subgroup(z2)) == Rational(1, 2));

  // the defect equals the off-orthogonal sampling mass, for every subgroup
  for (const Subgroup& h : all_subgroups(z12)) {
    for (int i = 0; i < 25; ++i) {
      const FunctionOracle f = random_function(z12, 5, rng);
      const auto dist = fourier_distribution(f);
      CHECK(std::abs(state_defect(f, h).to_double() -
                     mass_outside_orthogonal(z12, dist, h)) <= 1e-9);
    }
  }
}

TEST_CASE("pair defect") {
  const Group z2 = Group::abelian({2});
  // H-similar pair: zero
  const PairOracle similar(z2, {0, 1}, {1, 0}, 2);
  CHECK(pair_defect(similar, full_subgroup(z2)) == Rational(0));

  // disjoint constant values: exactly 1
  const PairOracle disjoint(z2, {0, 0}, {1, 1}, 2);
  CHECK(pair_defect(disjoint, full_subgroup(z2)) == Rational(1));

  // equals twice the (rho,1)-mass inside H^perp on Z8 with H = <4>
  const Group z8 = Group::abelian({8});
  const Subgroup h = subgroup_close(z8, {4});
  auto rng = RngStream(31);
  for (int i = 0; i < 50; ++i) {
    const PairOracle pair = random_pair(z8, 5, rng);
    const auto dist = fourier_distribution_pair(pair);
    CHECK(std::abs(pair_defect(pair, h).to_double() -
                   2.0 * pair_mass_b1_inside_orthogonal(z8, dist, h)) <= 1e-9);
  }
}

TEST_CASE("coset state mapping") {
  const Group z4 = Group::abelian({4});

  // trivial H, identity coset: uniform amplitudes 1/sqrt(|G|)
  const auto uniform = qft_coset_state(z4, 0, trivial_subgroup(z4));
  for (const auto& a : uniform.amp) {
    CHECK(std::abs(a - std::complex<double>(0.5, 0.0)) <= 1e-12);
  }

  // H = {0,2}, x = 0: amplitude 1/sqrt(2) exactly on y in {0,2}
  const Subgroup h02 = subgroup_close(z4, {2});
  const auto st = qft_coset_state(z4, 0, h02);
  CHECK(std::abs(st.amp[0] - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(st.amp[1]) <= 1e-12);
  CHECK(std::abs(st.amp[2] - 1.0 / std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(st.amp[3]) <= 1e-12);

  // matches the closed form for every (x, H) on Z12
  const Group z12 = Group::abelian({12});
  for (const Subgroup& h : all_subgroups(z12)) {
    for (std::int64_t x = 0; x < 12; ++x) {
      CHECK(max_abs_diff(qft_coset_state(z12, x, h),
                         orthogonal_coset_state(z12, x, h)) <= 1e-9);
    }
  }

  // D4 center cosets land exactly on the irreps trivial on the center
  const Group d4 = Group::dihedral(4);
  const auto reps = irrep_table(d4);
  const Subgroup center = subgroup_close(d4, {d4.index_of({2, 0})});
  for (std::int64_t x = 0; x < d4.order(); ++x) {
    const auto got = qft_coset_state_general(d4, reps, x, center);
    CHECK(max_abs_diff(got, orthogonal_coset_state_general(d4, reps, x, center)) <= 1e-9);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const std::size_t begin = got.offset[r];
      const std::size_t end = r + 1 < reps.size() ? got.offset[r + 1] : got.amp.size();
      double mass = 0.0;
      for (std::size_t i = begin; i < end; ++i) mass += std::norm(got.amp[i]);
      if (!reps[r].trivial_on(center)) CHECK(mass <= 1e-18);
    }
  }

  // non-normal subgroup of D4 is rejected
  const Subgroup refl = subgroup_close(d4, {d4.index_of({0, 1})});
  CHECK(!refl.normal);
  CHECK_THROWS_AS(qft_coset_state_general(d4, reps, 0, refl), std::invalid_argument);
}

TEST_CASE("superposition distance identity") {
  // dist(f,g) = 1/2 || |f> - |g> ||^2 with exact rationals on Z10
  const Group z10 = Group::abelian({10});
  auto rng = RngStream(41);
  for (int i = 0; i < 25; ++i) {
    const FunctionOracle f = random_function(z10, 4, rng);
    const FunctionOracle h = random_function(z10, 4, rng);
    std::int64_t diff = 0;
    Rational norm_sq(0);
    for (std::int64_t x = 0; x < 10; ++x) {
      const bool ne = f.table()[static_cast<std::size_t>(x)] !=
                      h.table()[static_cast<std::size_t>(x)];
      diff += ne ? 1 : 0;
      // per-point contribution of the superposition vectors
      if (ne) norm_sq += Rational(2, 10);
    }
    CHECK(Rational(diff, 10) == Rational(1, 2) * norm_sq);
  }
}

TEST_CASE("periodic support completeness") {
  // H-periodic functions sample only inside H^perp, as an exact-zero check
  const Group z8 = Group::abelian({8});
  auto rng = RngStream(51);
  for (const Subgroup& h : all_subgroups(z8)) {
    const FunctionOracle f = random_periodic(z8, h, 3, rng);
    const auto dist = fourier_distribution(f);
    for (std::int64_t y : dist.support()) {
      CHECK(char_trivial_on(z8, y, h));
    }
  }

  const Group q8 = Group::quaternion8();
  const auto reps = irrep_table(q8);
  for (const Subgroup& h : all_subgroups(q8)) {
    if (!h.normal) continue;
    const FunctionOracle f = random_periodic(q8, h, 3, rng);
    const auto dist = fourier_distribution_general(reps, f);
    for (std::int64_t r : dist.support()) {
      CHECK(reps[static_cast<std::size_t>(r)].trivial_on(h));
    }
  }
}
