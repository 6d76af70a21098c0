#pragma once

#include <string>

#include <json.hpp>

#include "hgt/experiments.hpp"

namespace hgt {

using ordered_json = nlohmann::ordered_json;

// Exact observation distribution as {outcome, probability} rows in
// canonical outcome order.
ordered_json distribution_json(const Group& g, const SamplingDistribution& d);

ordered_json verdict_json(const Group& g, const Verdict& v);

ordered_json identity_report_json(const IdentityReport& report);
ordered_json period_result_json(const PeriodRunConfig& cfg, const PeriodRunResult& result);
ordered_json ccr_result_json(const CcrRunConfig& cfg, const CcrRunResult& result);
ordered_json lowerbound_json(const LowerBoundReport& report);

std::string identity_report_csv(const IdentityReport& report);
std::string period_result_csv(const PeriodRunConfig& cfg, const PeriodRunResult& result);
std::string ccr_result_csv(const CcrRunConfig& cfg, const CcrRunResult& result);
std::string lowerbound_csv(const LowerBoundReport& report);

// Replayable instance files: {schema, group, kind, params, seed, table(s)}
// plus a self-check that the instance satisfies its own kind.
ordered_json period_instance_json(const Group& g, const std::string& kind,
                                  const ordered_json& params, std::uint64_t seed,
                                  const FunctionOracle& f);
ordered_json ccr_instance_json(const Group& g, const std::string& kind,
                               const ordered_json& params, std::uint64_t seed,
                               const PairOracle& f);

FunctionOracle load_period_instance(const ordered_json& doc);
PairOracle load_ccr_instance(const ordered_json& doc);

}  // namespace hgt
