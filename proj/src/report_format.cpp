#include "oes/report_format.hpp"

#include <sstream>

#include <json.hpp>

namespace oes {

using nlohmann::json;

bool parse_report_format(const std::string& text, ReportFormat& out) {
    if (text == "text") out = ReportFormat::Text;
    else if (text == "csv") out = ReportFormat::Csv;
    else if (text == "json") out = ReportFormat::Json;
    else return false;
    return true;
}

namespace {

json to_json(const PrevalenceReport& r) {
    json j;
    j["section_counts"] = r.section_counts;
    j["site_counts"] = r.site_counts;
    json values = json::object();
    for (const auto& [value, count] : r.value_counts) values[std::to_string(value)] = count;
    j["value_counts"] = values;
    j["score_1_to_9_count"] = r.score_1_to_9_count;
    j["comb_count"] = r.comb_count;
    j["total_records"] = r.total_records;
    j["denominator"] = r.denominator;
    json fractions = json::object();
    for (const auto& [section, count] : r.section_counts)
        fractions[section] = render_percent(count, r.denominator);
    j["fraction_of_denominator"] = fractions;
    j["notes"] = r.notes;
    return j;
}

json to_json(const BaseEvidenceReport& r) {
    json j;
    json histogram = json::object();
    for (const auto& [per_row, count] : r.per_row_histogram)
        histogram[std::to_string(per_row)] = count;
    j["per_row_histogram"] = histogram;
    j["score_records"] = r.score_records;
    j["rows_exceeding_9"] = r.rows_exceeding_9;
    j["max_single_row"] = r.max_single_row;
    j["verdict"] = r.verdict;
    j["notes"] = r.notes;
    return j;
}

json to_json(const RankedScore& r) {
    json j;
    j["rank"] = r.rank;
    j["tied_with_previous"] = r.tied_with_previous;
    j["hypothesis"] = r.score.name;
    j["collision_count"] = r.score.collision_count;
    j["coverage_gaps"] = r.score.coverage_gaps;
    j["unattested_predicted_forms"] = r.score.unattested_predicted_forms;
    j["dearth"] = {{"claimed_9", r.score.claimed_9},
                   {"claimed_19", r.score.claimed_19},
                   {"derived_9", r.score.derived_9},
                   {"derived_19", r.score.derived_19}};
    return j;
}

json to_json(const ValidationReport& r) {
    json findings = json::array();
    for (const Finding& f : r.findings)
        findings.push_back({{"kind", finding_kind_name(f.kind)},
                            {"record", f.record_id},
                            {"message", f.message}});
    return json{{"findings", findings}, {"has_mismatch", r.has_mismatch()}};
}

}  // namespace

std::string format_prevalence(const PrevalenceReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "group,key,count,fraction\n";
        for (const auto& [section, count] : r.section_counts)
            out << "section," << section << ',' << count << ','
                << render_percent(count, r.denominator) << '\n';
        for (const auto& [site, count] : r.site_counts)
            out << "site," << site << ',' << count << ",\n";
        for (const auto& [value, count] : r.value_counts)
            out << "value," << value << ',' << count << ",\n";
        out << "summary,score_1_to_9," << r.score_1_to_9_count << ",\n";
        out << "summary,comb," << r.comb_count << ",\n";
        out << "summary,total_records," << r.total_records << ",\n";
        return out.str();
    }
    out << "Prevalence (" << r.total_records << " records; fractions of "
        << r.denominator << " inscribed objects)\n";
    for (const auto& [section, count] : r.section_counts)
        out << "  section " << section << ": " << count << " ("
            << render_percent(count, r.denominator) << " of " << r.denominator << ")\n";
    out << "  score marks 1-9: " << r.score_1_to_9_count << '\n';
    out << "  comb motifs: " << r.comb_count << '\n';
    out << "  per-site counts:";
    for (const auto& [site, count] : r.site_counts) out << ' ' << site << '=' << count;
    out << '\n';
    out << "  per-value counts:";
    for (const auto& [value, count] : r.value_counts) out << ' ' << value << '=' << count;
    out << '\n';
    for (const std::string& note : r.notes) out << "  note: " << note << '\n';
    return out.str();
}

std::string format_base_evidence(const BaseEvidenceReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "per_row_strokes,records\n";
        for (const auto& [per_row, count] : r.per_row_histogram)
            out << per_row << ',' << count << '\n';
        out << "rows_exceeding_9," << r.rows_exceeding_9 << '\n';
        out << "max_single_row," << r.max_single_row << '\n';
        return out.str();
    }
    out << "Base evidence (" << r.score_records << " score rows)\n";
    out << "  per-row stroke histogram:";
    for (const auto& [per_row, count] : r.per_row_histogram) out << ' ' << per_row << 'x' << count;
    out << '\n';
    out << "  rows exceeding 9 strokes: " << r.rows_exceeding_9 << '\n';
    out << "  max strokes in one row: " << r.max_single_row << '\n';
    out << "  verdict: " << r.verdict << '\n';
    for (const std::string& note : r.notes) out << "  note: " << note << '\n';
    return out.str();
}

std::string format_comparison(const std::vector<RankedScore>& ranked, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json j = json::array();
        for (const RankedScore& r : ranked) j.push_back(to_json(r));
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "rank,hypothesis,collisions,unattested_forms,coverage_gaps,tied,"
               "claimed_9,claimed_19,derived_9,derived_19\n";
        for (const RankedScore& r : ranked)
            out << r.rank << ',' << r.score.name << ',' << r.score.collision_count << ','
                << r.score.unattested_predicted_forms.size() << ',' << r.score.coverage_gaps.size()
                << ',' << (r.tied_with_previous ? "yes" : "no") << ',' << r.score.claimed_9 << ','
                << r.score.claimed_19 << ',' << r.score.derived_9 << ',' << r.score.derived_19
                << '\n';
        return out.str();
    }
    out << "Hypothesis comparison (ranked by collisions, then unattested forms, then gaps)\n";
    for (const RankedScore& r : ranked) {
        out << "  " << r.rank << ". " << r.score.name << ": collisions=" << r.score.collision_count
            << " unattested_forms=" << r.score.unattested_predicted_forms.size()
            << " coverage_gaps=" << r.score.coverage_gaps.size();
        if (r.tied_with_previous) out << " (tie)";
        out << '\n';
        out << "     dearth: claimed 9s=" << r.score.claimed_9 << " 19s=" << r.score.claimed_19
            << "; derived 9s=" << r.score.derived_9 << " 19s=" << r.score.derived_19 << '\n';
    }
    return out.str();
}

std::string format_validation(const ValidationReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "kind,record,message\n";
        for (const Finding& f : r.findings)
            out << finding_kind_name(f.kind) << ',' << f.record_id << ',' << f.message << '\n';
        return out.str();
    }
    out << "Validation: " << r.findings.size() << " finding(s)\n";
    for (const Finding& f : r.findings)
        out << "  [" << finding_kind_name(f.kind) << "] " << f.record_id << ": " << f.message
            << '\n';
    return out.str();
}

}  // namespace oes
