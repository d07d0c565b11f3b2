#pragma once

#include <string>
#include <vector>

#include "oes/analysis.hpp"
#include "oes/corpus.hpp"

namespace oes {

enum class ReportFormat { Text, Csv, Json };
bool parse_report_format(const std::string& text, ReportFormat& out);

std::string format_prevalence(const PrevalenceReport& report, ReportFormat format);
std::string format_base_evidence(const BaseEvidenceReport& report, ReportFormat format);
std::string format_comparison(const std::vector<RankedScore>& ranked, ReportFormat format);
std::string format_validation(const ValidationReport& report, ReportFormat format);

}  // namespace oes
