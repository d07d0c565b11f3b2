#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace oes {

/// Sign families attested in the corpus. `Unknown` is only legal on
/// Opaque atoms and on corpus records whose form was not published.
enum class FamilyTag {
    Score,
    Comb,
    Pole,
    Divided,
    LongShort,
    Chevron,
    Cross,
    Composite,
    Unknown,
};

std::string family_name(FamilyTag tag);
bool parse_family_name(const std::string& text, FamilyTag& out);

/// `count` short strokes laid out in `rows` rows (or columns).
/// Table 1 records no layout, so rows defaults to 1.
struct ScoreRow {
    int count = 1;
    int rows = 1;
    bool operator==(const ScoreRow&) const = default;
};

/// Horizontal stroke with `teeth` perpendicular teeth.
struct Comb {
    int teeth = 1;
    bool operator==(const Comb&) const = default;
};

/// One long stroke crossed perpendicularly by `crossings` short strokes.
struct Pole {
    int crossings = 1;
    bool operator==(const Pole&) const = default;
};

/// Score marks on each side of a dividing line.
struct Divided {
    int left = 0;
    int right = 0;
    bool operator==(const Divided&) const = default;
};

/// `longs` long strokes juxtaposed with `shorts` short strokes.
struct LongShort {
    int longs = 1;
    int shorts = 0;
    bool operator==(const LongShort&) const = default;
};

/// The "V" sign.
struct Chevron {
    bool operator==(const Chevron&) const = default;
};

/// The "X" (or "+") sign.
struct Cross {
    bool operator==(const Cross&) const = default;
};

/// An attested sign whose stroke parameters the catalog does not record.
/// Carries only its family; its value can come only from a claimed value.
struct Opaque {
    FamilyTag family = FamilyTag::Unknown;
    bool operator==(const Opaque&) const = default;
};

using Atom = std::variant<ScoreRow, Comb, Pole, Divided, LongShort, Chevron, Cross, Opaque>;

/// One inscription's sign content. A single atom is a simple sign;
/// more than one atom is a ligature/juxtaposition.
struct Sign {
    std::vector<Atom> atoms;
    bool operator==(const Sign&) const = default;
};

FamilyTag atom_family(const Atom& atom);

/// Family projection: single-atom signs map to their atom's family,
/// multi-atom signs to Composite. Total over well-formed signs.
FamilyTag classify(const Sign& sign);

bool contains_opaque(const Sign& sign);

/// True when every atom satisfies its structural invariants
/// (positive counts, rows <= count, divided sides not both zero).
bool well_formed(const Sign& sign);

/// Canonical form. Divided sides are reordered to (max, min); ligature
/// structure and atom order are otherwise preserved. Idempotent, and
/// classify(normalize(s)) == classify(s). When `notes` is given, a line
/// is appended for each change made.
Sign normalize(const Sign& sign, std::vector<std::string>* notes = nullptr);

/// Non-fatal observations about a sign, e.g. comb teeth counts outside
/// the attested 3..8 range.
std::vector<std::string> validation_warnings(const Sign& sign);

}  // namespace oes
