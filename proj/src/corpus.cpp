#include "oes/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "oes/interpret.hpp"
#include "oes/notation.hpp"

namespace oes {

const std::vector<Site>& known_sites() {
    static const std::vector<Site> sites = {
        {"Tor", "Tordos"},   {"Vin", "Vinca"},       {"Anz", "Anza"},
        {"Ara", "Aradac"},   {"Ban", "Banjica"},     {"Div", "Divostin"},
        {"GorTu", "Gornja Tuzla"}, {"Grab", "Grabovac"}, {"Jel", "Jela"},
        {"Korm", "Kormadin"}, {"Med", "Medvednjak"}, {"Vrs", "Vrsac"},
    };
    return sites;
}

const Site* find_site(const std::string& abbreviation) {
    for (const Site& site : known_sites())
        if (site.abbreviation == abbreviation) return &site;
    return nullptr;
}

std::string object_kind_name(ObjectKind kind) {
    switch (kind) {
        case ObjectKind::Pot: return "pot";
        case ObjectKind::Whorl: return "whorl";
        case ObjectKind::Figurine: return "figurine";
        case ObjectKind::Other: return "other";
        case ObjectKind::Unknown: return "unknown";
    }
    return "unknown";
}

std::string locus_name(Locus locus) {
    switch (locus) {
        case Locus::Base: return "base";
        case Locus::Body: return "body";
        case Locus::Unknown: return "unknown";
    }
    return "unknown";
}

std::string table_section_name(TableSection section) {
    switch (section) {
        case TableSection::A: return "A";
        case TableSection::B: return "B";
        case TableSection::C1: return "C1";
        case TableSection::C2: return "C2";
        case TableSection::C3: return "C3";
        case TableSection::D: return "D";
    }
    return "A";
}

bool parse_object_kind(const std::string& text, ObjectKind& out) {
    for (ObjectKind k : {ObjectKind::Pot, ObjectKind::Whorl, ObjectKind::Figurine,
                         ObjectKind::Other, ObjectKind::Unknown}) {
        if (text == object_kind_name(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

bool parse_locus(const std::string& text, Locus& out) {
    for (Locus l : {Locus::Base, Locus::Body, Locus::Unknown}) {
        if (text == locus_name(l)) {
            out = l;
            return true;
        }
    }
    return false;
}

bool parse_table_section(const std::string& text, TableSection& out) {
    for (TableSection s : {TableSection::A, TableSection::B, TableSection::C1,
                           TableSection::C2, TableSection::C3, TableSection::D}) {
        if (text == table_section_name(s)) {
            out = s;
            return true;
        }
    }
    return false;
}

std::string finding_kind_name(FindingKind kind) {
    switch (kind) {
        case FindingKind::DuplicateInList: return "duplicate-in-list";
        case FindingKind::MultipleListings: return "multiple-listings";
        case FindingKind::ValueMismatch: return "value-mismatch";
        case FindingKind::OutOfAttestedRange: return "out-of-attested-range";
        case FindingKind::SectionFamilyMismatch: return "section-family-mismatch";
    }
    return "value-mismatch";
}

namespace {

constexpr const char* kHeader = "id,site,kind,locus,family,claimed_value,notation,table_section";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

bool parse_claimed_value(const std::string& text, std::optional<ClaimedValue>& out,
                         std::string& error) {
    out.reset();
    if (text.empty()) return true;
    std::string digits = text;
    ClaimedValue cv;
    if (digits.front() == '?') {
        cv.tentative = true;
        digits.erase(0, 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        error = "bad claimed_value '" + text + "'";
        return false;
    }
    cv.value = std::stoi(digits);
    out = cv;
    return true;
}

}  // namespace

LoadResult load_corpus(std::istream& in) {
    LoadResult result;
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) {
        result.errors.push_back({1, "empty file (missing header)"});
        return result;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) {
        result.errors.push_back({1, "unexpected header '" + line + "'"});
        return result;
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto fields = split_fields(line);
        if (fields.size() != 8) {
            result.errors.push_back(
                {line_no, "expected 8 fields, got " + std::to_string(fields.size())});
            continue;
        }

        CorpusRecord record;
        record.id = fields[0];
        record.site = fields[1];
        record.notation = fields[6];
        bool row_ok = true;

        if (record.id.empty()) {
            result.errors.push_back({line_no, "empty id"});
            row_ok = false;
        }
        if (!find_site(record.site)) {
            result.errors.push_back({line_no, "unknown site '" + record.site + "'"});
            row_ok = false;
        } else if (record.id.rfind(record.site, 0) != 0) {
            result.errors.push_back(
                {line_no, "id '" + record.id + "' does not begin with site '" + record.site + "'"});
            row_ok = false;
        }
        if (!parse_object_kind(fields[2], record.kind)) {
            result.errors.push_back({line_no, "bad kind '" + fields[2] + "'"});
            row_ok = false;
        }
        if (!parse_locus(fields[3], record.locus)) {
            result.errors.push_back({line_no, "bad locus '" + fields[3] + "'"});
            row_ok = false;
        }
        if (!parse_family_name(fields[4], record.family)) {
            result.errors.push_back({line_no, "bad family '" + fields[4] + "'"});
            row_ok = false;
        }
        std::string cv_error;
        if (!parse_claimed_value(fields[5], record.claimed_value, cv_error)) {
            result.errors.push_back({line_no, cv_error});
            row_ok = false;
        }
        if (!parse_table_section(fields[7], record.section)) {
            result.errors.push_back({line_no, "bad table_section '" + fields[7] + "'"});
            row_ok = false;
        }

        if (!record.notation.empty()) {
            ParseResult parsed = parse_sign(record.notation);
            if (const auto* err = std::get_if<NotationError>(&parsed)) {
                result.errors.push_back(
                    {line_no, "notation '" + record.notation + "': " + err->message +
                                  " (" + notation_error_kind_name(err->kind) + " at offset " +
                                  std::to_string(err->position) + ")"});
                row_ok = false;
            } else {
                record.sign = std::get<Sign>(parsed);
                const FamilyTag parsed_family = classify(*record.sign);
                if (row_ok && parsed_family != record.family) {
                    result.errors.push_back(
                        {line_no, "family '" + family_name(record.family) +
                                      "' disagrees with notation family '" +
                                      family_name(parsed_family) + "'"});
                    row_ok = false;
                }
            }
        }

        if (row_ok) result.corpus.records.push_back(std::move(record));
    }
    return result;
}

LoadResult load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        LoadResult result;
        result.errors.push_back({0, "cannot open '" + path + "'"});
        return result;
    }
    return load_corpus(in);
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out = kHeader;
    out += '\n';
    for (const CorpusRecord& r : corpus.records) {
        out += r.id;
        out += ',';
        out += r.site;
        out += ',';
        out += object_kind_name(r.kind);
        out += ',';
        out += locus_name(r.locus);
        out += ',';
        out += family_name(r.family);
        out += ',';
        if (r.claimed_value) {
            if (r.claimed_value->tentative) out += '?';
            out += std::to_string(r.claimed_value->value);
        }
        out += ',';
        out += r.notation;
        out += ',';
        out += table_section_name(r.section);
        out += '\n';
    }
    return out;
}

bool ValidationReport::has_mismatch() const {
    return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
        return f.kind == FindingKind::ValueMismatch;
    });
}

namespace {

FamilyTag expected_family_for_section(TableSection section) {
    switch (section) {
        case TableSection::A: return FamilyTag::Score;
        case TableSection::B: return FamilyTag::Comb;
        case TableSection::C1: return FamilyTag::Pole;
        case TableSection::C2: return FamilyTag::Divided;
        case TableSection::C3: return FamilyTag::LongShort;
        case TableSection::D: return FamilyTag::Unknown;  // chevron or cross
    }
    return FamilyTag::Unknown;
}

std::string claimed_text(const ClaimedValue& cv) {
    return (cv.tentative ? "?" : "") + std::to_string(cv.value);
}

}  // namespace

ValidationReport validate(const Corpus& corpus) {
    ValidationReport report;

    // Listing key: section + claimed value. Same id twice under one key is
    // a duplicate-in-list; same id under several keys is a cross-listing.
    std::map<std::string, std::map<std::string, int>> listings;  // id -> key -> count
    for (const CorpusRecord& r : corpus.records) {
        std::string key = table_section_name(r.section);
        if (r.claimed_value) key += "(" + claimed_text(*r.claimed_value) + ")";
        ++listings[r.id][key];
    }
    for (const auto& [id, keys] : listings) {
        for (const auto& [key, count] : keys) {
            if (count > 1)
                report.findings.push_back({FindingKind::DuplicateInList, id,
                                           "listed " + std::to_string(count) + " times under " + key});
        }
        if (keys.size() > 1) {
            std::string where;
            for (const auto& [key, count] : keys) {
                if (!where.empty()) where += ", ";
                where += key;
            }
            report.findings.push_back(
                {FindingKind::MultipleListings, id, "listed under " + where});
        }
    }

    const Hypothesis def = default_hypothesis();
    for (const CorpusRecord& r : corpus.records) {
        if (r.section != TableSection::D) {
            const FamilyTag expected = expected_family_for_section(r.section);
            if (r.family != expected)
                report.findings.push_back(
                    {FindingKind::SectionFamilyMismatch, r.id,
                     "section " + table_section_name(r.section) + " expects family '" +
                         family_name(expected) + "', record has '" + family_name(r.family) + "'"});
        } else if (r.family != FamilyTag::Chevron && r.family != FamilyTag::Cross) {
            report.findings.push_back(
                {FindingKind::SectionFamilyMismatch, r.id,
                 "section D expects chevron or cross, record has '" + family_name(r.family) + "'"});
        }

        if (!r.sign) continue;

        for (const std::string& warning : validation_warnings(*r.sign))
            report.findings.push_back({FindingKind::OutOfAttestedRange, r.id, warning});
        for (const Atom& atom : r.sign->atoms) {
            if (const auto* s = std::get_if<ScoreRow>(&atom); s && s->count > kAttestedScoreMax)
                report.findings.push_back(
                    {FindingKind::OutOfAttestedRange, r.id,
                     std::to_string(s->count) + " score marks exceed the common 1..9 range"});
        }

        if (r.claimed_value) {
            const Interpretation interp = evaluate(*r.sign, def);
            const bool matched =
                std::any_of(interp.candidates.begin(), interp.candidates.end(),
                            [&](const Candidate& c) { return c.value == r.claimed_value->value; });
            if (!matched)
                report.findings.push_back(
                    {FindingKind::ValueMismatch, r.id,
                     "claimed value " + claimed_text(*r.claimed_value) +
                         " is not among the default-hypothesis candidates for '" + r.notation + "'"});
        }
    }
    return report;
}

bool RecordFilter::matches(const CorpusRecord& record) const {
    if (site && record.site != *site) return false;
    if (kind && record.kind != *kind) return false;
    if (family && record.family != *family) return false;
    if (section && record.section != *section) return false;
    if (claimed_value &&
        (!record.claimed_value || record.claimed_value->value != *claimed_value))
        return false;
    if (tentative && (!record.claimed_value || record.claimed_value->tentative != *tentative))
        return false;
    return true;
}

Corpus filter(const Corpus& corpus, const RecordFilter& predicate) {
    Corpus out;
    out.total_inscriptions_constant = corpus.total_inscriptions_constant;
    for (const CorpusRecord& r : corpus.records)
        if (predicate.matches(r)) out.records.push_back(r);
    return out;
}

}  // namespace oes
