#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gridtriage/assessment.hpp"
#include "gridtriage/dataset.hpp"

namespace gridtriage {

enum class ReportFormat { Json, Csv, Table };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// Renderers are byte-stable: fixed field order, bt and repair hours at four
// decimals, line values both raw and in units of 1e13.
std::string render_validation(const Dataset& data, ReportFormat format);
std::string render_damage(const AssessmentReport& report, ReportFormat format);
std::string render_ranking(const AssessmentReport& report, ReportFormat format);
std::string render_plan(const AssessmentReport& report, ReportFormat format);
std::string render_sweep(std::span<const SweepRow> rows, ReportFormat format);

// "%.4f".
std::string fixed4(double value);

}  // namespace gridtriage
