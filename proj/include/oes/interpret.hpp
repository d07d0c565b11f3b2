#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oes/sign.hpp"

namespace oes {

/// Reading rule for the comb motif.
struct CombRule {
    enum class Kind { TenPlusN, NOnly, NPlusOne, NTimesB, BPlusN };
    Kind kind = Kind::TenPlusN;
    int base = 0;  // required for NTimesB / BPlusN, >= 2
    bool operator==(const CombRule&) const = default;
};

enum class PoleRule { TenPlusN, NOnly, Both };
enum class DividedRule { SumPlusTen, SumOnly, Both };

/// A complete assignment of numeric rules to each sign family.
struct Hypothesis {
    std::string name = "default";
    CombRule comb{};
    PoleRule pole = PoleRule::Both;
    DividedRule divided = DividedRule::Both;
    int chevron_value = 10;
    int cross_value = 20;
    int longshort_unit = 10;  // multiplier for long strokes
    bool operator==(const Hypothesis&) const = default;
};

/// The preferred reading: comb = 10+n, pole and divided keep both
/// candidate readings, V = 10, X = 20, long strokes worth 10.
Hypothesis default_hypothesis();

/// Resolves a preset name: "default", "comb-n", "comb-n1",
/// "comb-nb:<B>", "comb-b9".
std::optional<Hypothesis> hypothesis_by_name(const std::string& name);

std::string comb_rule_name(const CombRule& rule);

/// One reading of one atom.
struct AtomReading {
    int value = 0;
    std::string rule;      // human-readable rule applied
    bool tentative = false;  // chevron/cross values carry a "?" in the catalog
};

/// One candidate value for a whole sign, with its derivation.
struct TraceStep {
    std::string atom;  // canonical notation of the atom
    std::string rule;
    int contribution = 0;
};

struct Candidate {
    int value = 0;
    std::vector<TraceStep> steps;
};

enum class Confidence { Asserted, Tentative };

struct Interpretation {
    std::vector<Candidate> candidates;  // sorted by value, descending, deduplicated
    Confidence confidence = Confidence::Asserted;
    std::size_t combination_count = 0;  // Cartesian-product size before deduplication
    bool deduplicated = false;          // true when identical sums were merged
};

/// All readings of one atom under a hypothesis. Throws
/// std::invalid_argument for Opaque atoms (non-evaluable from form).
std::vector<AtomReading> evaluate_atom(const Atom& atom, const Hypothesis& h);

/// Candidate set of a whole sign: every sum formed by choosing one
/// reading per atom. Throws std::invalid_argument if the sign contains
/// an Opaque atom.
Interpretation evaluate(const Sign& sign, const Hypothesis& h);

// Attested parameter ranges observed in Table 1; single-atom forms
// outside these are evaluable but excluded from expressibility.
inline constexpr int kAttestedScoreMax = 9;
inline constexpr int kAttestedCombMin = 3;
inline constexpr int kAttestedCombMax = 8;
inline constexpr int kAttestedPoleMax = 9;
inline constexpr int kAttestedDividedSideMax = 9;
inline constexpr int kAttestedLongMax = 4;
inline constexpr int kAttestedShortMax = 9;

/// Values <= max reachable by some single-atom sign with parameters in
/// the attested ranges. Requires max >= 1.
std::set<int> expressible_values(const Hypothesis& h, int max);

}  // namespace oes
