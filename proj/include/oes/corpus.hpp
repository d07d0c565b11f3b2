#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oes/sign.hpp"

namespace oes {

/// Excavation site, closed set of catalog abbreviations.
struct Site {
    std::string abbreviation;
    std::string full_name;
};

/// All sites the catalog abbreviates.
const std::vector<Site>& known_sites();
const Site* find_site(const std::string& abbreviation);

enum class ObjectKind { Pot, Whorl, Figurine, Other, Unknown };
enum class Locus { Base, Body, Unknown };
enum class TableSection { A, B, C1, C2, C3, D };

std::string object_kind_name(ObjectKind kind);
std::string locus_name(Locus locus);
std::string table_section_name(TableSection section);
bool parse_object_kind(const std::string& text, ObjectKind& out);
bool parse_locus(const std::string& text, Locus& out);
bool parse_table_section(const std::string& text, TableSection& out);

/// Claimed value from the catalog heading; "?" marks tentative
/// readings ("?10" / "?20").
struct ClaimedValue {
    int value = 0;
    bool tentative = false;
    bool operator==(const ClaimedValue&) const = default;
};

/// One catalog entry.
struct CorpusRecord {
    std::string id;  // site abbreviation + number, e.g. "Tor91"
    std::string site;
    ObjectKind kind = ObjectKind::Pot;
    Locus locus = Locus::Unknown;
    FamilyTag family = FamilyTag::Unknown;
    std::optional<ClaimedValue> claimed_value;
    std::string notation;  // empty = no recoverable form (opaque)
    TableSection section = TableSection::A;
    std::optional<Sign> sign;  // parsed from notation when present
};

/// Known only as an order-of-magnitude constant for the full corpus;
/// the shipped catalog is a subset, so this is configuration, not a
/// derived count.
inline constexpr int kTotalInscriptions = 940;

struct Corpus {
    std::vector<CorpusRecord> records;
    int total_inscriptions_constant = kTotalInscriptions;
};

struct LoadError {
    int line = 0;  // 1-based line number in the file
    std::string message;
};

struct LoadResult {
    Corpus corpus;
    std::vector<LoadError> errors;  // per-row, not fail-fast
    bool ok() const { return errors.empty(); }
};

// CSV format: header `id,site,kind,locus,family,claimed_value,notation,table_section`,
// empty string = absent, tentative values prefixed "?".
LoadResult load_corpus(std::istream& in);
LoadResult load_corpus_file(const std::string& path);

/// Canonical re-serialization; loading a well-formed file and
/// serializing it again is byte-identical.
std::string serialize_corpus(const Corpus& corpus);

enum class FindingKind {
    DuplicateInList,     // same id twice under one value list
    MultipleListings,    // id appears under several values/sections
    ValueMismatch,       // default-hypothesis evaluation disagrees with claimed value
    OutOfAttestedRange,  // parameters outside the attested extremes
    SectionFamilyMismatch,
};

std::string finding_kind_name(FindingKind kind);

struct Finding {
    FindingKind kind;
    std::string record_id;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;
    bool has_mismatch() const;
};

/// Reports duplicates, cross-listings, claimed-vs-derived disagreements
/// and out-of-range parameters. Duplicates stay in the corpus as
/// distinct records (one object can bear several inscriptions); they
/// are only flagged.
ValidationReport validate(const Corpus& corpus);

/// Record filter; unset fields match everything.
struct RecordFilter {
    std::optional<std::string> site;
    std::optional<ObjectKind> kind;
    std::optional<FamilyTag> family;
    std::optional<TableSection> section;
    std::optional<int> claimed_value;
    std::optional<bool> tentative;

    bool matches(const CorpusRecord& record) const;
};

/// Order-preserving subset; the total-inscriptions constant carries over.
Corpus filter(const Corpus& corpus, const RecordFilter& predicate);

}  // namespace oes
