#pragma once

// JSON and CSV renderings of the engine reports. Every JSON report has the
// top-level keys tool_version, config, series, summary, skipped, assumptions.

#include "rfdiv/diversity.hpp"
#include "rfdiv/sieve.hpp"

#include "json.hpp"

#include <ostream>
#include <string_view>

namespace rfdiv::report {

using nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";

json envelope(json config, json series, json summary, json skipped, json assumptions);
json skipped_json(const std::vector<diversity::Skipped>& skipped);
json factorization_json(const arith::Factorization& f);

json to_json(const diversity::DiversityReport& r, const json& config);
json to_json(const diversity::CompositumReport& r, const json& config);
json to_json(const sieve::SieveReport& r, const json& config);

/// Header "n,D"; one row per n that is not in the skipped list.
void write_csv(const diversity::DiversityReport& r, std::ostream& out);
/// Header "n,r"; one row per n that is not in the skipped list.
void write_csv(const diversity::CompositumReport& r, std::ostream& out);
/// Header "n,squarefree"; needs a report built with keep_flags.
void write_csv(const sieve::SieveReport& r, std::ostream& out);

/// Structural check of the envelope and of the subcommand-specific summary keys.
/// Returns an empty string when valid, otherwise the first problem found.
std::string validate(const json& report);

}  // namespace rfdiv::report
