// Command-line driver: identity verification suites, tester experiments,
// the classical lower-bound experiment and instance generation, all with
// machine-readable output. Exit codes: 0 ok, 1 invariant violation,
// 2 usage error, 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hgt/serialize.hpp"

namespace {

using hgt::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
  os << text;
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open instance file: " + path);
  return ordered_json::parse(is);
}

struct CommonOpts {
  std::string group = "Z12";
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--group", opts.group, "group spec: Z<n>(xZ<n>)* | D<n> | S3 | Q8");
  cmd->add_option("--seed", opts.seed, "master seed");
  cmd->add_option("--out", opts.out, "output file (default: stdout)");
  cmd->add_option("--format", opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int run_verify_lemmas(const CommonOpts& common, std::int64_t trials) {
  const hgt::Group g = hgt::parse_group(common.group);
  const hgt::IdentityReport report = hgt::run_identity_suite(g, trials, common.seed);
  emit(common.format == "csv" ? hgt::identity_report_csv(report)
                              : render(hgt::identity_report_json(report)),
       common.out);
  return report.all_pass() ? 0 : 1;
}

int run_period_cmd(const CommonOpts& common, hgt::PeriodRunConfig cfg,
                   const std::string& instance_file) {
  cfg.group = common.group;
  cfg.seed = common.seed;
  hgt::PeriodRunResult result = [&] {
    if (!instance_file.empty()) {
      const hgt::FunctionOracle f = hgt::load_period_instance(read_json_file(instance_file));
      cfg.group = f.domain().to_string();
      cfg.instance = "custom-table";
      return hgt::run_period_on(cfg, f, std::nullopt);
    }
    return hgt::run_period(cfg);
  }();
  emit(common.format == "csv" ? hgt::period_result_csv(cfg, result)
                              : render(hgt::period_result_json(cfg, result)),
       common.out);
  return 0;
}

int run_ccr_cmd(const CommonOpts& common, hgt::CcrRunConfig cfg,
                const std::string& instance_file) {
  cfg.group = common.group;
  cfg.seed = common.seed;
  hgt::CcrRunResult result = [&] {
    if (!instance_file.empty()) {
      const hgt::PairOracle f = hgt::load_ccr_instance(read_json_file(instance_file));
      cfg.group = f.domain().to_string();
      cfg.instance = "custom-table";
      return hgt::run_ccr_on(cfg, f, std::nullopt);
    }
    return hgt::run_ccr(cfg);
  }();
  emit(common.format == "csv" ? hgt::ccr_result_csv(cfg, result)
                              : render(hgt::ccr_result_json(cfg, result)),
       common.out);
  return 0;
}

int run_lowerbound_cmd(const CommonOpts& common, std::int64_t q, std::int64_t trials) {
  const hgt::LowerBoundReport report =
      hgt::run_lowerbound(common.group, q, trials, common.seed);
  emit(common.format == "csv" ? hgt::lowerbound_csv(report)
                              : render(hgt::lowerbound_json(report)),
       common.out);
  return 0;
}

int run_gen_instance(const CommonOpts& common, const std::string& kind,
                     const std::string& subgroup, const std::string& translation,
                     double perturb, std::int64_t values) {
  const hgt::Group g = hgt::parse_group(common.group);
  auto rng = hgt::RngStream::substream(common.seed, 0);
  ordered_json params{{"values", values}};

  if (kind == "periodic" || kind == "perturbed-periodic") {
    if (subgroup.empty()) throw std::invalid_argument("periodic kinds need --H gens=...");
    const hgt::Subgroup h = hgt::parse_subgroup(g, subgroup);
    hgt::FunctionOracle f = hgt::random_periodic(g, h, values, rng);
    params["H"] = subgroup;
    if (kind == "perturbed-periodic") {
      auto rng2 = hgt::RngStream::substream(common.seed, 1);
      f = hgt::perturb_to_distance(f, perturb, rng2);
      params["perturb"] = perturb;
    } else if (hgt::dist_to_per(f, h) != hgt::Rational(0)) {
      throw std::logic_error("periodic instance failed its self-check");
    }
    emit(render(hgt::period_instance_json(g, kind, params, common.seed, f)), common.out);
    return 0;
  }
  if (kind == "injective" || kind == "far-from-lp") {
    const hgt::FunctionOracle f = hgt::injective_oracle(g);
    emit(render(hgt::period_instance_json(g, kind, params, common.seed, f)), common.out);
    return 0;
  }
  if (kind == "hidden-translation" || kind == "d1") {
    std::int64_t u;
    if (kind == "d1") {
      u = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(g.order())));
      values = g.order() * g.order() * g.order();
    } else {
      if (translation.empty()) throw std::invalid_argument("hidden-translation needs --u (coords)");
      u = g.parse_element(translation);
    }
    params["u"] = g.format_element(u);
    params["values"] = values;
    const hgt::PairOracle f = hgt::hidden_translation_pair(g, u, values, rng);
    if (hgt::dist_to_range(f, hgt::subgroup_close(g, {u})) != hgt::Rational(0)) {
      throw std::logic_error("translated pair failed its self-check");
    }
    emit(render(hgt::ccr_instance_json(g, kind, params, common.seed, f)), common.out);
    return 0;
  }
  if (kind == "disjoint-range") {
    const hgt::PairOracle f = hgt::disjoint_range_pair(g);
    emit(render(hgt::ccr_instance_json(g, kind, params, common.seed, f)), common.out);
    return 0;
  }
  if (kind == "d2") {
    const hgt::PairOracle f = hgt::sample_independent_pair(g, rng);
    params["values"] = f.value_universe();
    emit(render(hgt::ccr_instance_json(g, kind, params, common.seed, f)), common.out);
    return 0;
  }
  throw std::invalid_argument("unknown instance kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum testers for hidden group properties: exact simulation and experiments"};
  app.require_subcommand(1);

  CommonOpts common;
  std::int64_t trials = 50;
  double delta = 0.1;
  std::string base = "gens=";
  std::string subgroup;
  std::string translation;
  std::string instance = "periodic";
  std::string instance_file;
  double perturb = 0.0;
  std::int64_t values = 5;
  std::int64_t k = 1, t = 1;
  std::int64_t q = 0;
  std::int64_t budget = hgt::kDefaultTupleBudget;

  auto* verify = app.add_subcommand("verify-lemmas", "machine-check the exact identities");
  add_common(verify, common);
  verify->add_option("--trials", trials, "random functions per check");

  auto* period = app.add_subcommand("period", "larger-period tester (character sampling)");
  add_common(period, common);
  period->add_option("--K", base, "known subgroup, gens=(..);(..)");
  period->add_option("--delta", delta, "distance parameter in (0,1)");
  period->add_option("--instance", instance, "periodic | perturbed-periodic | injective");
  period->add_option("--H", subgroup, "period subgroup for periodic instances");
  period->add_option("--d", perturb, "perturbation fraction for perturbed-periodic");
  period->add_option("--values", values, "value-set size for random instances");
  period->add_option("--trials", trials, "tester runs");
  period->add_option("--instance-file", instance_file, "replay a gen-instance file");

  auto* period_general = app.add_subcommand(
      "period-general", "larger-period tester (irrep-label sampling)");
  add_common(period_general, common);
  period_general->add_option("--K", base, "known normal subgroup, gens=(..);(..)");
  period_general->add_option("--delta", delta, "distance parameter in (0,1)");
  period_general->add_option("--instance", instance, "periodic | perturbed-periodic | injective");
  period_general->add_option("--H", subgroup, "period subgroup for periodic instances");
  period_general->add_option("--d", perturb, "perturbation fraction");
  period_general->add_option("--values", values, "value-set size");
  period_general->add_option("--trials", trials, "tester runs");
  period_general->add_option("--instance-file", instance_file, "replay a gen-instance file");

  auto* ccr = app.add_subcommand("ccr", "common-coset-range tester");
  add_common(ccr, common);
  ccr->add_option("--k", k, "subgroup size bound");
  ccr->add_option("--t", t, "generator count bound");
  ccr->add_option("--delta", delta, "distance parameter in (0,1)");
  ccr->add_option("--instance", instance, "hidden-translation | disjoint-range | d1 | d2");
  ccr->add_option("--u", translation, "translation element, e.g. (4)");
  ccr->add_option("--values", values, "value-set size for random instances");
  ccr->add_option("--trials", trials, "tester runs");
  ccr->add_option("--budget", budget, "enumeration tuple budget");
  ccr->add_option("--instance-file", instance_file, "replay a gen-instance file");

  auto* lower = app.add_subcommand("lowerbound", "classical cross-collision distinguisher");
  add_common(lower, common);
  lower->add_option("--q", q, "classical query budget");
  lower->add_option("--trials", trials, "trials per instance distribution");

  auto* gen = app.add_subcommand("gen-instance", "generate a replayable instance file");
  add_common(gen, common);
  gen->add_option("--instance", instance,
                  "periodic | perturbed-periodic | injective | hidden-translation | "
                  "disjoint-range | d1 | d2");
  gen->add_option("--H", subgroup, "period subgroup");
  gen->add_option("--u", translation, "translation element");
  gen->add_option("--d", perturb, "perturbation fraction");
  gen->add_option("--values", values, "value-set size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify_lemmas(common, trials);
    if (period->parsed() || period_general->parsed()) {
      hgt::PeriodRunConfig cfg;
      cfg.general = period_general->parsed();
      cfg.delta = delta;
      cfg.base = base;
      cfg.instance = instance;
      cfg.subgroup = subgroup;
      cfg.perturb = perturb;
      cfg.values = values;
      cfg.trials = trials;
      return run_period_cmd(common, cfg, instance_file);
    }
    if (ccr->parsed()) {
      hgt::CcrRunConfig cfg;
      cfg.delta = delta;
      cfg.k = k;
      cfg.t = t;
      cfg.instance = instance;
      cfg.translation = translation;
      cfg.values = values;
      cfg.trials = trials;
      cfg.tuple_budget = budget;
      return run_ccr_cmd(common, cfg, instance_file);
    }
    if (lower->parsed()) return run_lowerbound_cmd(common, q, trials);
    if (gen->parsed()) {
      return run_gen_instance(common, instance, subgroup, translation, perturb, values);
    }
  } catch (const hgt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
