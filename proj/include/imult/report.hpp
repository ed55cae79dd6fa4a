#pragma once

// JSON reports. Keys are sorted, rationals are "num/den" strings and algebraic numbers
// are {tower: [moduli], rep: text}.

#include <string>
#include <vector>

#include "json.hpp"

#include "imult/campaign.hpp"
#include "imult/newton.hpp"

namespace imult {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "imult-report/1";

Json to_json(const Rational& q);
Json to_json(const AlgNum& a);
Json to_json(const Point& p);
Json to_json(const MultiplicityResult& r);
Json to_json(const NewtonPolygon& poly);
Json to_json(const std::vector<Branch>& branches);
Json to_json(const ExperimentConfig& cfg);
Json to_json(const InstanceReport& r, bool timings);
Json to_json(const CampaignReport& r);
Json to_json(const std::vector<DegenerateRow>& rows);
Json to_json(const FgReport& r);

/// Wraps `body` with the schema tag and the command name; two-space indent, trailing newline.
std::string render_report(const std::string& command, Json body);

}  // namespace imult
