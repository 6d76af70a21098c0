#include "hgt/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace hgt {

namespace {

bool pair_space(OutcomeSpace s) {
  return s == OutcomeSpace::PairCharacters || s == OutcomeSpace::PairIrrepLabels;
}

bool irrep_space(OutcomeSpace s) {
  return s == OutcomeSpace::IrrepLabels || s == OutcomeSpace::PairIrrepLabels;
}

ordered_json outcome_label(const Group& g, const std::vector<Irrep>& reps,
                           OutcomeSpace space, std::int64_t code) {
  const std::int64_t label = pair_space(space) ? code / 2 : code;
  ordered_json name = irrep_space(space)
                          ? ordered_json(reps.at(static_cast<std::size_t>(label)).label())
                          : ordered_json(g.format_element(label));
  if (!pair_space(space)) return name;
  return ordered_json::array({name, code % 2});
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

ordered_json distribution_json(const Group& g, const SamplingDistribution& d) {
  const std::vector<Irrep> reps =
      irrep_space(d.space) ? irrep_table(g) : std::vector<Irrep>{};
  ordered_json rows = ordered_json::array();
  for (std::size_t code = 0; code < d.prob.size(); ++code) {
    rows.push_back({{"outcome", outcome_label(g, reps, d.space,
                                              static_cast<std::int64_t>(code))},
                    {"probability", d.prob[code]}});
  }
  return rows;
}

ordered_json verdict_json(const Group& g, const Verdict& v) {
  const std::vector<Irrep> reps =
      irrep_space(v.space) ? irrep_table(g) : std::vector<Irrep>{};
  ordered_json samples = ordered_json::array();
  for (std::int64_t code : v.samples) {
    samples.push_back(outcome_label(g, reps, v.space, code));
  }
  ordered_json j;
  j["accepted"] = v.accepted;
  j["N"] = v.sample_count;
  j["queries_used"] = v.queries_used;
  j["seed"] = v.seed;
  j["samples"] = std::move(samples);
  j["witness"] = v.witness ? ordered_json(format_subgroup(g, *v.witness))
                           : ordered_json(nullptr);
  return j;
}

ordered_json identity_report_json(const IdentityReport& report) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "verify-lemmas";
  j["group"] = report.group;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_deviation", c.max_deviation},
                      {"tolerance", c.tolerance},
                      {"cases", c.cases},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  return j;
}

namespace {

ordered_json run_header(const char* command, const std::string& group,
                        std::int64_t trials, std::uint64_t seed) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["group"] = group;
  j["trials"] = trials;
  j["seed"] = seed;
  return j;
}

}  // namespace

ordered_json period_result_json(const PeriodRunConfig& cfg, const PeriodRunResult& result) {
  const Group g = parse_group(cfg.group);
  ordered_json j = run_header(cfg.general ? "period-general" : "period", cfg.group,
                              cfg.trials, cfg.seed);
  j["delta"] = cfg.delta;
  j["K"] = cfg.base;
  j["instance"] = {{"kind", cfg.instance},
                   {"subgroup", cfg.subgroup},
                   {"perturb", cfg.perturb},
                   {"values", cfg.values}};
  j["exact_distance"] = result.distance;
  j["positive_certified"] = result.positive_certified;
  j["summary"] = {{"accept_rate", result.accept_rate},
                  {"queries_per_trial", result.queries_per_trial}};
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : result.verdicts) verdicts.push_back(verdict_json(g, v));
  j["verdicts"] = std::move(verdicts);
  return j;
}

ordered_json ccr_result_json(const CcrRunConfig& cfg, const CcrRunResult& result) {
  const Group g = parse_group(cfg.group);
  ordered_json j = run_header("ccr", cfg.group, cfg.trials, cfg.seed);
  j["delta"] = cfg.delta;
  j["k"] = cfg.k;
  j["t"] = cfg.t;
  j["instance"] = {{"kind", cfg.instance},
                   {"translation", cfg.translation},
                   {"values", cfg.values}};
  j["exact_distance"] = result.distance;
  j["positive_certified"] = result.positive_certified;
  j["summary"] = {{"accept_rate", result.accept_rate},
                  {"queries_per_trial", result.queries_per_trial}};
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : result.verdicts) verdicts.push_back(verdict_json(g, v));
  j["verdicts"] = std::move(verdicts);
  return j;
}

ordered_json lowerbound_json(const LowerBoundReport& report) {
  ordered_json j = run_header("lowerbound", report.group, report.trials, report.seed);
  j["order"] = report.order;
  j["q"] = report.queries;
  j["p1"] = report.p1;
  j["p2"] = report.p2;
  j["advantage"] = report.advantage;
  j["wilson_p1"] = {report.interval1.lo, report.interval1.hi};
  j["wilson_p2"] = {report.interval2.lo, report.interval2.hi};
  return j;
}

std::string identity_report_csv(const IdentityReport& report) {
  std::ostringstream os;
  os << "name,max_deviation,tolerance,cases,pass\n";
  for (const auto& c : report.checks) {
    os << c.name << "," << fmt_double(c.max_deviation) << "," << fmt_double(c.tolerance)
       << "," << c.cases << "," << (c.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

namespace {

std::string verdict_rows_csv(const Group& g, const std::vector<Verdict>& verdicts) {
  const std::vector<Irrep> reps =
      !verdicts.empty() && irrep_space(verdicts.front().space) ? irrep_table(g)
                                                               : std::vector<Irrep>{};
  std::ostringstream os;
  os << "trial,seed,accepted,sample_count,queries_used,witness,samples\n";
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Verdict& v = verdicts[i];
    os << i << "," << v.seed << "," << (v.accepted ? "true" : "false") << ","
       << v.sample_count << "," << v.queries_used << ","
       << (v.witness ? format_subgroup(g, *v.witness) : "") << ",";
    for (std::size_t s = 0; s < v.samples.size(); ++s) {
      if (s) os << ";";
      const ordered_json label = outcome_label(g, reps, v.space, v.samples[s]);
      if (label.is_string()) {
        os << label.get<std::string>();
      } else {
        os << label[0].get<std::string>() << "|" << label[1].get<int>();
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string period_result_csv(const PeriodRunConfig& cfg, const PeriodRunResult& result) {
  const Group g = parse_group(cfg.group);
  std::string out = verdict_rows_csv(g, result.verdicts);
  std::ostringstream os;
  os << "# summary accept_rate=" << fmt_double(result.accept_rate)
     << " queries_per_trial=" << result.queries_per_trial
     << " exact_distance=" << result.distance
     << " positive_certified=" << (result.positive_certified ? "true" : "false") << "\n";
  return out + os.str();
}

std::string ccr_result_csv(const CcrRunConfig& cfg, const CcrRunResult& result) {
  const Group g = parse_group(cfg.group);
  std::string out = verdict_rows_csv(g, result.verdicts);
  std::ostringstream os;
  os << "# summary accept_rate=" << fmt_double(result.accept_rate)
     << " queries_per_trial=" << result.queries_per_trial
     << " exact_distance=" << result.distance
     << " positive_certified=" << (result.positive_certified ? "true" : "false") << "\n";
  return out + os.str();
}

std::string lowerbound_csv(const LowerBoundReport& report) {
  std::ostringstream os;
  os << "group,order,q,trials,seed,p1,p2,advantage,wilson_p1_lo,wilson_p1_hi,"
        "wilson_p2_lo,wilson_p2_hi\n";
  os << report.group << "," << report.order << "," << report.queries << ","
     << report.trials << "," << report.seed << "," << fmt_double(report.p1) << ","
     << fmt_double(report.p2) << "," << fmt_double(report.advantage) << ","
     << fmt_double(report.interval1.lo) << "," << fmt_double(report.interval1.hi) << ","
     << fmt_double(report.interval2.lo) << "," << fmt_double(report.interval2.hi) << "\n";
  return os.str();
}

namespace {

ordered_json table_json(const std::vector<std::int64_t>& table) {
  return ordered_json(table);
}

std::vector<std::int64_t> table_from_json(const ordered_json& j) {
  return j.get<std::vector<std::int64_t>>();
}

}  // namespace

ordered_json period_instance_json(const Group& g, const std::string& kind,
                                  const ordered_json& params, std::uint64_t seed,
                                  const FunctionOracle& f) {
  ordered_json j;
  j["schema"] = 1;
  j["group"] = g.to_string();
  j["kind"] = kind;
  j["params"] = params;
  j["seed"] = seed;
  j["value_universe"] = f.value_universe();
  j["table"] = table_json(f.table());
  return j;
}

ordered_json ccr_instance_json(const Group& g, const std::string& kind,
                               const ordered_json& params, std::uint64_t seed,
                               const PairOracle& f) {
  ordered_json j;
  j["schema"] = 1;
  j["group"] = g.to_string();
  j["kind"] = kind;
  j["params"] = params;
  j["seed"] = seed;
  j["value_universe"] = f.value_universe();
  j["tables"] = {{"f0", table_json(f.table(0))}, {"f1", table_json(f.table(1))}};
  return j;
}

FunctionOracle load_period_instance(const ordered_json& doc) {
  const Group g = parse_group(doc.at("group").get<std::string>());
  return FunctionOracle(g, table_from_json(doc.at("table")),
                        doc.at("value_universe").get<std::int64_t>());
}

PairOracle load_ccr_instance(const ordered_json& doc) {
  const Group g = parse_group(doc.at("group").get<std::string>());
  return PairOracle(g, table_from_json(doc.at("tables").at("f0")),
                    table_from_json(doc.at("tables").at("f1")),
                    doc.at("value_universe").get<std::int64_t>());
}

}  // namespace hgt
