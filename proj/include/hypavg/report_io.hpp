#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <string_view>

#include "hypavg/audit.hpp"
#include "hypavg/distribution.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/witness.hpp"

namespace hypavg {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kAvgReportSchema = "hypavg/avg-report/1";
inline constexpr std::string_view kAuditReportSchema = "hypavg/audit-report/1";
inline constexpr std::string_view kWitnessSchema = "hypavg/witness/1";

Json to_json(const Estimate& e);

/// `graph` and `distribution` are free-form descriptors copied verbatim.
/// Exact rationals, when given, are added as "p/q" strings.
Json avg_report_json(const AvgReport& r, const Json& graph, const Json& distribution,
                     const ExactAverages* exact = nullptr);

Json audit_report_json(const AuditReport& r);

Json witness_json(const Witness& w);
/// Throws ParseError on a malformed document.
Witness witness_from_json(const Json& doc);

std::string rational_string(const Rational& q);

/// "vertex weight" per line, '#' comments; vertices not listed get weight 0.
VertexDistribution load_distribution(std::istream& in, std::size_t vertex_count);
VertexDistribution load_distribution_file(const std::string& path, std::size_t vertex_count);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace hypavg
