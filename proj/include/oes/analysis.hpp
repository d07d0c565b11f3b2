#pragma once

#include <map>
#include <string>
#include <vector>

#include "oes/corpus.hpp"
#include "oes/interpret.hpp"

namespace oes {

/// Fraction rendered to one decimal percent, e.g. "14.3%".
std::string render_percent(int count, int denominator);

struct PrevalenceReport {
    std::map<std::string, int> section_counts;       // by section name
    std::map<int, int> value_counts;                 // by claimed value
    std::map<std::string, int> site_counts;          // by site abbreviation
    int score_1_to_9_count = 0;                      // section A records with value 1..9
    int comb_count = 0;                              // section B records
    int total_records = 0;
    int denominator = kTotalInscriptions;            // fixed full-corpus constant
    std::vector<std::string> notes;
};

PrevalenceReport prevalence(const Corpus& corpus);

struct BaseEvidenceReport {
    std::map<int, int> per_row_histogram;  // per-row stroke count -> records
    int score_records = 0;                 // histogram mass
    int rows_exceeding_9 = 0;
    int max_single_row = 0;
    std::string verdict;
    std::vector<std::string> notes;
};

/// Run-length evidence for a base-10 reading. Multi-row layouts split
/// their strokes evenly across rows; no layout data exists, so records
/// without a rows value count as single-row.
BaseEvidenceReport infer_base(const Corpus& corpus);

// Coverage ceiling: the highest value the catalog attests.
inline constexpr int kCoverageCeiling = 42;

struct HypothesisScore {
    std::string name;
    /// Unordered pairs of distinct single-atom forms from
    /// {score 1..9, comb 3..8} whose candidate sets overlap.
    int collision_count = 0;
    /// Integers 1..42 no attested single-atom form reaches.
    std::vector<int> coverage_gaps;
    /// Composite forms the rule requires for values between multiples
    /// but the corpus lacks (multiplicative comb rules only).
    std::vector<std::string> unattested_predicted_forms;
    // Dearth of 9's and 19's, counted both ways.
    int claimed_9 = 0;
    int claimed_19 = 0;
    int derived_9 = 0;
    int derived_19 = 0;
};

HypothesisScore score_hypothesis(const Corpus& corpus, const Hypothesis& h);

struct RankedScore {
    HypothesisScore score;
    int rank = 0;                    // 1-based; tied entries share a rank
    bool tied_with_previous = false;
};

/// Ranked lexicographically by (collisions, unattested forms, coverage
/// gaps), ascending; ties keep input order and are flagged. Throws
/// std::invalid_argument on an empty list.
std::vector<RankedScore> compare(const Corpus& corpus, const std::vector<Hypothesis>& hypotheses);

}  // namespace oes
