// Acceptance suite: one criterion per function, one pass/fail line each.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "hgt/experiments.hpp"
#include "hgt/serialize.hpp"

using namespace hgt;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %d. %s (%s%.2fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              detail.empty() ? "" : (detail + "; ").c_str(), secs);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---- criterion 1: defect / off-support mass identity on Z12 ----------------

bool defect_identity(std::string& detail) {
  const Group z12 = Group::abelian({12});
  const auto subgroups = all_subgroups(z12);
  double worst = 0.0;
  std::uint64_t stream = 0;
  for (int i = 0; i < 50; ++i) {
    auto rng = RngStream::substream(1001, stream++);
    const FunctionOracle f = random_function(z12, 5, rng);
    const SamplingDistribution dist = fourier_distribution(f);
    for (const Subgroup& h : subgroups) {
      worst = std::max(worst, std::abs(state_defect(f, h).to_double() -
                                       mass_outside_orthogonal(z12, dist, h)));
    }
  }
  detail = "max dev " + fmt(worst);
  return worst <= 1e-9;
}

// ---- criterion 2: majority-correction bound + brute-force distances --------

bool majority_bound(std::string& detail) {
  double worst_slack = 0.0;

  const Group z12 = Group::abelian({12});
  std::uint64_t stream = 0;
  for (int i = 0; i < 50; ++i) {
    auto rng = RngStream::substream(2001, stream++);
    const FunctionOracle f = random_function(z12, 5, rng);
    for (const Subgroup& h : all_subgroups(z12)) {
      const Rational slack = dist_to_per(f, h) - Rational(2) * state_defect(f, h);
      worst_slack = std::max(worst_slack, slack.to_double());
    }
  }

  const Group d4 = Group::dihedral(4);
  const auto reps = irrep_table(d4);
  for (int i = 0; i < 50; ++i) {
    auto rng = RngStream::substream(2002, stream++);
    const FunctionOracle f = random_function(d4, 5, rng);
    const SamplingDistribution dist = fourier_distribution_general(reps, f);
    for (const Subgroup& h : all_subgroups(d4)) {
      if (!h.normal) continue;
      const double slack = dist_to_per(f, h).to_double() -
                           2.0 * mass_outside_orthogonal_general(reps, dist, h);
      worst_slack = std::max(worst_slack, slack);
    }
  }
  if (worst_slack > 1e-9) {
    detail = "bound violated by " + fmt(worst_slack);
    return false;
  }

  // exhaustive brute-force distance agreement on Z4 and Z2xZ2 with |S| = 3
  std::int64_t mismatches = 0, checked = 0;
  for (const Group& g : {Group::abelian({4}), Group::abelian({2, 2})}) {
    const auto subgroups = all_subgroups(g);
    std::vector<std::int64_t> table(4, 0);
    for (;;) {
      const FunctionOracle f(g, table, 3);
      for (const Subgroup& h : subgroups) {
        ++checked;
        if (dist_to_per(f, h) != brute::dist_to_periodic(g, table, h, 3)) ++mismatches;
      }
      std::size_t j = 0;
      while (j < 4 && ++table[j] == 3) table[j++] = 0;
      if (j == 4) break;
    }
  }
  detail = "max slack " + fmt(worst_slack) + ", " + std::to_string(checked) +
           " exhaustive distances";
  return mismatches == 0;
}

// ---- criterion 3: coset-state mapping ---------------------------------------

bool coset_state_mapping(std::string& detail) {
  double worst = 0.0;

  const Group z12 = Group::abelian({12});
  for (const Subgroup& h : all_subgroups(z12)) {
    for (std::int64_t x = 0; x < z12.order(); ++x) {
      worst = std::max(worst, max_abs_diff(qft_coset_state(z12, x, h),
                                           orthogonal_coset_state(z12, x, h)));
    }
  }
  for (const Group& g : {Group::dihedral(4), Group::quaternion8()}) {
    const auto reps = irrep_table(g);
    for (const Subgroup& h : all_subgroups(g)) {
      if (!h.normal) continue;
      for (std::int64_t x = 0; x < g.order(); ++x) {
        worst = std::max(worst,
                         max_abs_diff(qft_coset_state_general(g, reps, x, h),
                                      orthogonal_coset_state_general(g, reps, x, h)));
      }
    }
  }
  detail = "max dev " + fmt(worst);
  return worst <= 1e-9;
}

// ---- criterion 4: one-sided completeness, support-certified -----------------

bool completeness(std::string& detail) {
  int certified = 0, accepted = 0;
  std::uint64_t stream = 0;

  // character tester: 20 instances across Abelian groups with K < H
  const std::vector<Group> abelian = {Group::abelian({8}), Group::abelian({12}),
                                      Group::abelian({16}), Group::abelian({2, 2, 2}),
                                      Group::abelian({12, 2})};
  for (int i = 0; i < 20; ++i) {
    const Group& g = abelian[static_cast<std::size_t>(i) % abelian.size()];
    auto rng = RngStream::substream(4001, stream++);
    const auto subgroups = all_subgroups(g);
    // draw K < H from the lattice
    const Subgroup* h = nullptr;
    const Subgroup* k = nullptr;
    while (!h) {
      const auto& cand = subgroups[rng.next_below(subgroups.size())];
      if (cand.order() > 1) h = &cand;
    }
    while (!k) {
      const auto& cand = subgroups[rng.next_below(subgroups.size())];
      if (h->contains_all(cand) && cand.order() < h->order()) k = &cand;
    }
    const FunctionOracle f = random_periodic(g, *h, 5, rng);
    if (certify_period_accepts(f, *h, *k)) ++certified;
    TesterParams params;
    params.delta = 0.25;
    params.base = *k;
    if (test_larger_period(f, params, mix_seed(4002, stream)).accepted) ++accepted;
  }

  // irrep tester: 20 instances on the non-Abelian families
  const std::vector<Group> general = {Group::dihedral(4), Group::symmetric3(),
                                      Group::quaternion8(), Group::dihedral(6)};
  for (int i = 0; i < 20; ++i) {
    const Group& g = general[static_cast<std::size_t>(i) % general.size()];
    const auto reps = irrep_table(g);
    auto rng = RngStream::substream(4003, stream++);
    std::vector<Subgroup> normal;
    for (const auto& s : all_subgroups(g)) {
      if (s.normal) normal.push_back(s);
    }
    const Subgroup* h = nullptr;
    const Subgroup* k = nullptr;
    while (!h) {
      const auto& cand = normal[rng.next_below(normal.size())];
      if (cand.order() > 1) h = &cand;
    }
    while (!k) {
      const auto& cand = normal[rng.next_below(normal.size())];
      if (h->contains_all(cand) && cand.order() < h->order()) k = &cand;
    }
    const FunctionOracle f = random_periodic(g, *h, 5, rng);
    if (certify_period_general_accepts(f, reps, *h, *k)) ++certified;
    TesterParams params;
    params.delta = 0.25;
    params.base = *k;
    if (test_larger_period_general(f, params, mix_seed(4004, stream)).accepted) ++accepted;
  }

  // coset-range tester: 20 translated pairs, including f0 = f1
  const std::vector<Group> ccr_groups = {Group::abelian({8}), Group::abelian({12}),
                                         Group::abelian({2, 2, 2, 2}),
                                         Group::abelian({16})};
  for (int i = 0; i < 20; ++i) {
    const Group& g = ccr_groups[static_cast<std::size_t>(i) % ccr_groups.size()];
    auto rng = RngStream::substream(4005, stream++);
    const auto u = i % 5 == 0 ? g.identity()
                              : static_cast<std::int64_t>(rng.next_below(
                                    static_cast<std::uint64_t>(g.order())));
    const PairOracle pair = hidden_translation_pair(g, u, 6, rng);
    const Subgroup hu = subgroup_close(g, {u});
    const std::int64_t bound = std::max<std::int64_t>(hu.order(), 1);
    if (certify_ccr_accepts(pair, hu, bound, 1)) ++certified;
    TesterParams params;
    params.delta = 0.25;
    params.k = bound;
    params.t = 1;
    if (test_common_coset_range(pair, params, mix_seed(4006, stream)).accepted) ++accepted;
  }

  detail = std::to_string(certified) + "/60 certified, " + std::to_string(accepted) +
           "/60 accepted";
  return certified == 60 && accepted == 60;
}

// ---- criterion 5: soundness at desk scale -----------------------------------

bool soundness(std::string& detail) {
  const Group z16 = Group::abelian({16});

  const FunctionOracle inj = injective_oracle(z16);
  const auto d = dist_to_larger_period(inj, trivial_subgroup(z16));
  if (!d || !(*d > Rational(3, 10))) {
    detail = "injective instance is not far enough";
    return false;
  }
  int rejected_period = 0;
  TesterParams period_params;
  period_params.delta = 0.3;
  period_params.base = trivial_subgroup(z16);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (!test_larger_period(inj, period_params, seed).accepted) ++rejected_period;
  }

  const PairOracle dis = disjoint_range_pair(z16);
  if (dist_to_ccr(dis, 16, 1) != Rational(1, 2)) {
    detail = "disjoint-range distance is not 1/2";
    return false;
  }
  int rejected_ccr = 0;
  TesterParams ccr_par;
  ccr_par.delta = 0.3;
  ccr_par.k = 16;
  ccr_par.t = 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (!test_common_coset_range(dis, ccr_par, seed).accepted) ++rejected_ccr;
  }

  detail = "period rejected " + std::to_string(rejected_period) + "/100 (dist " +
           d->str() + "), ccr rejected " + std::to_string(rejected_ccr) + "/100";
  return rejected_period >= 90 && rejected_ccr >= 90;
}

// ---- criterion 6: exact query accounting ------------------------------------

bool query_accounting(std::string& detail) {
  const Group z16 = Group::abelian({16});
  const Group z12 = Group::abelian({12});

  const FunctionOracle inj16 = injective_oracle(z16);
  TesterParams p;
  p.delta = 0.1;
  p.base = trivial_subgroup(z16);
  const Verdict v1 = test_larger_period(inj16, p, 5);
  if (v1.queries_used != 160 || v1.sample_count != 160) {
    detail = "Z16 delta=0.1 used " + std::to_string(v1.queries_used);
    return false;
  }

  const PairOracle dis16 = disjoint_range_pair(z16);
  TesterParams c;
  c.delta = 0.5;
  c.k = 4;
  c.t = 1;
  const Verdict v2 = test_common_coset_range(dis16, c, 5);
  if (v2.queries_used != 64) {
    detail = "Z16 k=4 t=1 delta=0.5 used " + std::to_string(v2.queries_used);
    return false;
  }

  // formula agreement across a spread of parameters, on every run
  bool ok = true;
  for (double delta : {0.1, 0.25, 0.3, 0.7}) {
    TesterParams pp;
    pp.delta = delta;
    pp.base = trivial_subgroup(z12);
    const FunctionOracle f = injective_oracle(z12);
    const std::uint64_t before = f.queries();
    const Verdict v = test_larger_period(f, pp, 11);
    ok = ok && v.queries_used == period_sample_count(12, delta);
    ok = ok && (f.queries() - before) == static_cast<std::uint64_t>(v.queries_used);

    for (std::int64_t k : {1, 2, 6}) {
      TesterParams cc;
      cc.delta = delta;
      cc.k = k;
      cc.t = 1;
      const PairOracle pair = disjoint_range_pair(z12);
      const Verdict w = test_common_coset_range(pair, cc, 11);
      ok = ok && w.queries_used == ccr_sample_count(12, k, 1, delta);
    }
  }
  detail = "period 160, ccr 64, formulas exact";
  return ok;
}

// ---- criterion 7: pair histogram bound + brute-force validation -------------

bool pair_bound(std::string& detail) {
  const Group z8 = Group::abelian({8});
  const Subgroup h = subgroup_close(z8, {4});
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = RngStream::substream(7001, i);
    const PairOracle pair = random_pair(z8, 5, rng);
    const SamplingDistribution dist = fourier_distribution_pair(pair);
    const double slack = dist_to_range(pair, h).to_double() -
                         static_cast<double>(h.order()) *
                             pair_mass_b1_inside_orthogonal(z8, dist, h);
    worst = std::max(worst, slack);
  }
  if (worst > 1e-9) {
    detail = "bound violated by " + fmt(worst);
    return false;
  }

  // brute-force Range(H) minimizer on Z2 (exhaustive) and Z4 (sampled)
  std::int64_t mismatches = 0;
  const Group z2 = Group::abelian({2});
  for (const Subgroup& sub : all_subgroups(z2)) {
    std::vector<std::int64_t> t0(2, 0), t1(2, 0);
    for (;;) {
      const PairOracle f(z2, t0, t1, 3);
      if (dist_to_range(f, sub) != brute::dist_to_similar_pair(z2, f, sub, 3)) {
        ++mismatches;
      }
      std::size_t j = 0;
      std::vector<std::int64_t*> slots = {&t0[0], &t0[1], &t1[0], &t1[1]};
      while (j < 4 && ++*slots[j] == 3) *slots[j++] = 0;
      if (j == 4) break;
    }
  }
  const Group z4 = Group::abelian({4});
  for (const Subgroup& sub : all_subgroups(z4)) {
    for (std::uint64_t i = 0; i < 40; ++i) {
      auto rng = RngStream::substream(7002, i);
      const PairOracle f = random_pair(z4, 3, rng);
      if (dist_to_range(f, sub) != brute::dist_to_similar_pair(z4, f, sub, 3)) {
        ++mismatches;
      }
    }
  }
  detail = "max slack " + fmt(worst) + ", brute-force mismatches " +
           std::to_string(mismatches);
  return mismatches == 0;
}

// ---- criterion 8: classical lower-bound demonstration -----------------------

bool lowerbound_demo(std::string& detail) {
  const LowerBoundReport low = run_lowerbound("Z4096", 8, 2000, 8001);
  const LowerBoundReport high = run_lowerbound("Z4096", 256, 2000, 8002);
  detail = "adv(q=8) = " + fmt(low.advantage) + " [p1 in " + fmt(low.interval1.lo) +
           "," + fmt(low.interval1.hi) + "], adv(q=256) = " + fmt(high.advantage) +
           " [p1 in " + fmt(high.interval1.lo) + "," + fmt(high.interval1.hi) + "]";
  return low.advantage <= 0.1 && high.advantage >= 0.5;
}

// ---- criterion 9: byte-identical reruns --------------------------------------

bool reproducibility(std::string& detail) {
  const std::string cli = HGT_CLI_PATH;
  const std::vector<std::string> commands = {
      "verify-lemmas --group Z12 --trials 20 --seed 7",
      "period --group Z16 --delta 0.3 --instance injective --trials 10 --seed 13",
      "ccr --group Z8 --k 2 --t 1 --delta 0.3 --instance hidden-translation "
      "--u \"(4)\" --trials 10 --seed 13",
      "lowerbound --group Z1024 --q 32 --trials 100 --seed 13",
      "gen-instance --group Z12 --instance periodic --H \"gens=(4)\" --seed 3",
      "period --group Z16 --delta 0.3 --instance injective --trials 5 --seed 13 "
      "--format csv",
  };
  int stable = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string a = "/tmp/hgt_accept_a" + std::to_string(i);
    const std::string b = "/tmp/hgt_accept_b" + std::to_string(i);
    const std::string run_a = cli + " " + commands[i] + " --out " + a + " >/dev/null 2>&1";
    const std::string run_b = cli + " " + commands[i] + " --out " + b + " >/dev/null 2>&1";
    if (std::system(run_a.c_str()) != 0 || std::system(run_b.c_str()) != 0) continue;
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    if (!sa.str().empty() && sa.str() == sb.str()) ++stable;
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
  detail = std::to_string(stable) + "/" + std::to_string(commands.size()) +
           " commands byte-identical";
  return stable == static_cast<int>(commands.size());
}

}  // namespace

int main() {
  criterion(1, "state defect equals off-orthogonal mass on Z12", defect_identity);
  criterion(2, "majority-correction bound and exact brute-force distances", majority_bound);
  criterion(3, "coset states map onto the orthogonal side (Z12, D4, Q8)",
            coset_state_mapping);
  criterion(4, "one-sided completeness certified by support checks", completeness);
  criterion(5, "far instances rejected in >= 90/100 seeded trials", soundness);
  criterion(6, "query accounting matches the sample-count formulas", query_accounting);
  criterion(7, "pair histogram bound and brute-force range distances", pair_bound);
  criterion(8, "classical cross-collision advantage at q=8 vs q=256", lowerbound_demo);
  criterion(9, "commands re-run byte-identically", reproducibility);

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
