#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pcakit/pipeline.hpp"

namespace pcakit {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ReportFormat { text, json };

/// "text" or "json"; anything else throws ErrorKind::unknown_format.
ReportFormat parse_report_format(std::string_view name);

/// Text tables print numbers at 3 decimals; JSON keeps full precision.
/// Both are deterministic for a given report.
std::string render_report(const PipelineReport& r, ReportFormat format);

nlohmann::json report_to_json(const PipelineReport& r);

/// Inverse of report_to_json. Throws ErrorKind::parse_error on a malformed
/// document.
PipelineReport report_from_json(const nlohmann::json& j);

/// Fixed 3-decimal rendering; values that round to zero print unsigned.
std::string format_fixed3(double v);

}  // namespace pcakit
