#include "oes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace oes {

std::string render_percent(int count, int denominator) {
    const double tenths = std::round(count * 1000.0 / denominator);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", tenths / 10.0);
    return buf;
}

PrevalenceReport prevalence(const Corpus& corpus) {
    PrevalenceReport report;
    report.denominator = corpus.total_inscriptions_constant;
    report.total_records = static_cast<int>(corpus.records.size());
    for (const CorpusRecord& r : corpus.records) {
        ++report.section_counts[table_section_name(r.section)];
        ++report.site_counts[r.site];
        if (r.claimed_value) ++report.value_counts[r.claimed_value->value];
        if (r.section == TableSection::A && r.claimed_value &&
            r.claimed_value->value >= 1 && r.claimed_value->value <= 9)
            ++report.score_1_to_9_count;
        if (r.section == TableSection::B) ++report.comb_count;
    }
    if (report.comb_count == 34)
        report.notes.push_back(
            "comb discrepancy: the catalog's B lists total 34 entries where the running text "
            "says 33; Tor152 and Med10 also appear under A and may be the extra entry");
    if (report.section_counts.count("A") && report.score_1_to_9_count != report.section_counts.at("A"))
        report.notes.push_back(
            "the 134-inscription figure matches all of section A; its 1-9 rows alone sum to " +
            std::to_string(report.score_1_to_9_count));
    report.notes.push_back(
        "paper-asserted, not recomputable from this catalog: 32% of pottery inscriptions are "
        "simple number signs; 28% of inscriptions sit on the bottom of a pot");
    return report;
}

BaseEvidenceReport infer_base(const Corpus& corpus) {
    BaseEvidenceReport report;
    bool uneven_split = false;
    bool multi_row_seen = false;
    for (const CorpusRecord& r : corpus.records) {
        if (r.family != FamilyTag::Score || !r.sign) continue;
        for (const Atom& atom : r.sign->atoms) {
            const auto* s = std::get_if<ScoreRow>(&atom);
            if (!s) continue;
            if (s->rows > 1) multi_row_seen = true;
            if (s->count % s->rows != 0) uneven_split = true;
            const int per_row = (s->count + s->rows - 1) / s->rows;  // even split, rounded up
            ++report.per_row_histogram[per_row];
            ++report.score_records;
            if (per_row > 9) ++report.rows_exceeding_9;
            report.max_single_row = std::max(report.max_single_row, per_row);
        }
    }
    report.verdict = report.rows_exceeding_9 == 0
                         ? "consistent with a unit of 10: no row runs past 9 strokes"
                         : std::to_string(report.rows_exceeding_9) +
                               " record(s) run past 9 strokes per row; the common run still "
                               "stays at or under 9, consistent with a unit of 10";
    report.notes.push_back(
        "the running text counts only two inscriptions with more than nine strokes in a "
        "single row or column; the catalog lacks layout data, so the all-single-row reading "
        "shown here can disagree with that count");
    if (multi_row_seen)
        report.notes.push_back("multi-row layouts split their strokes evenly across rows");
    if (uneven_split)
        report.notes.push_back("some stroke counts do not divide evenly by their rows; "
                               "per-row counts were rounded up");
    return report;
}

namespace {

// Attested single-atom forms the comb argument ranges over.
std::vector<Atom> comb_argument_forms() {
    std::vector<Atom> forms;
    for (int c = 1; c <= kAttestedScoreMax; ++c) forms.push_back(ScoreRow{c, 1});
    for (int t = kAttestedCombMin; t <= kAttestedCombMax; ++t) forms.push_back(Comb{t});
    return forms;
}

bool candidate_sets_overlap(const Atom& a, const Atom& b, const Hypothesis& h) {
    for (const AtomReading& ra : evaluate_atom(a, h))
        for (const AtomReading& rb : evaluate_atom(b, h))
            if (ra.value == rb.value) return true;
    return false;
}

bool corpus_attests_comb_ligature(const Corpus& corpus) {
    for (const CorpusRecord& r : corpus.records) {
        if (!r.sign || r.sign->atoms.size() < 2) continue;
        for (const Atom& atom : r.sign->atoms)
            if (std::holds_alternative<Comb>(atom)) return true;
    }
    return false;
}

}  // namespace

HypothesisScore score_hypothesis(const Corpus& corpus, const Hypothesis& h) {
    HypothesisScore score;
    score.name = h.name;

    const std::vector<Atom> forms = comb_argument_forms();
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (candidate_sets_overlap(forms[i], forms[j], h)) ++score.collision_count;

    const std::set<int> reachable = expressible_values(h, kCoverageCeiling);
    for (int v = 1; v <= kCoverageCeiling; ++v)
        if (!reachable.count(v)) score.coverage_gaps.push_back(v);

    if (h.comb.kind == CombRule::Kind::NTimesB && !corpus_attests_comb_ligature(corpus)) {
        // A multiplicative comb needs comb+score composites for the
        // values between multiples; the catalog has none.
        for (int t = kAttestedCombMin; t <= kAttestedCombMax; ++t)
            for (int s = 1; s <= kAttestedScoreMax; ++s)
                score.unattested_predicted_forms.push_back(
                    "C" + std::to_string(t) + ";S" + std::to_string(s));
    }

    const Hypothesis def = default_hypothesis();
    for (const CorpusRecord& r : corpus.records) {
        if (r.claimed_value) {
            if (r.claimed_value->value == 9) ++score.claimed_9;
            if (r.claimed_value->value == 19) ++score.claimed_19;
        }
        if (r.sign) {
            const Interpretation interp = evaluate(*r.sign, def);
            for (const Candidate& c : interp.candidates) {
                if (c.value == 9) ++score.derived_9;
                if (c.value == 19) ++score.derived_19;
            }
        }
    }
    return score;
}

std::vector<RankedScore> compare(const Corpus& corpus, const std::vector<Hypothesis>& hypotheses) {
    if (hypotheses.empty())
        throw std::invalid_argument("hypothesis list must be non-empty");

    std::vector<RankedScore> ranked;
    ranked.reserve(hypotheses.size());
    for (const Hypothesis& h : hypotheses)
        ranked.push_back({score_hypothesis(corpus, h)});

    auto key = [](const HypothesisScore& s) {
        return std::make_tuple(s.collision_count, s.unattested_predicted_forms.size(),
                               s.coverage_gaps.size());
    };
    std::stable_sort(ranked.begin(), ranked.end(), [&](const RankedScore& a, const RankedScore& b) {
        return key(a.score) < key(b.score);
    });
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i > 0 && key(ranked[i].score) == key(ranked[i - 1].score)) {
            ranked[i].rank = ranked[i - 1].rank;
            ranked[i].tied_with_previous = true;
        } else {
            ranked[i].rank = static_cast<int>(i) + 1;
        }
    }
    return ranked;
}

}  // namespace oes
