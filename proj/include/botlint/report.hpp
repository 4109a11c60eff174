#pragma once

#include <string>
#include <vector>

#include "botlint/hints.hpp"
#include "botlint/issue.hpp"
#include "botlint/metrics.hpp"

namespace botlint {

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_format(const std::string& name); // "text" | "json" | "csv"

// Single-project report. Issues must already be canonically sorted. The JSON
// shape is versioned ("schema": "botlint-report-1") and stable: serialize,
// parse and serialize again is byte-identical.
std::string serialize_report(const std::string& project_path,
                             const std::vector<Issue>& issues,
                             const ProjectMetrics& metrics,
                             const std::vector<Warning>& warnings,
                             ReportFormat format, const HintCatalog& hints,
                             const std::string& language);

} // namespace botlint
