#include "oes/sign.hpp"

#include <algorithm>
#include <utility>

namespace oes {

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Score: return "score";
        case FamilyTag::Comb: return "comb";
        case FamilyTag::Pole: return "pole";
        case FamilyTag::Divided: return "divided";
        case FamilyTag::LongShort: return "longshort";
        case FamilyTag::Chevron: return "chevron";
        case FamilyTag::Cross: return "cross";
        case FamilyTag::Composite: return "composite";
        case FamilyTag::Unknown: return "unknown";
    }
    return "unknown";
}

bool parse_family_name(const std::string& text, FamilyTag& out) {
    static const std::pair<const char*, FamilyTag> table[] = {
        {"score", FamilyTag::Score},       {"comb", FamilyTag::Comb},
        {"pole", FamilyTag::Pole},         {"divided", FamilyTag::Divided},
        {"longshort", FamilyTag::LongShort}, {"chevron", FamilyTag::Chevron},
        {"cross", FamilyTag::Cross},       {"composite", FamilyTag::Composite},
        {"unknown", FamilyTag::Unknown},
    };
    for (const auto& [name, tag] : table) {
        if (text == name) {
            out = tag;
            return true;
        }
    }
    return false;
}

FamilyTag atom_family(const Atom& atom) {
    return std::visit(
        [](const auto& a) -> FamilyTag {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ScoreRow>) return FamilyTag::Score;
            else if constexpr (std::is_same_v<T, Comb>) return FamilyTag::Comb;
            else if constexpr (std::is_same_v<T, Pole>) return FamilyTag::Pole;
            else if constexpr (std::is_same_v<T, Divided>) return FamilyTag::Divided;
            else if constexpr (std::is_same_v<T, LongShort>) return FamilyTag::LongShort;
            else if constexpr (std::is_same_v<T, Chevron>) return FamilyTag::Chevron;
            else if constexpr (std::is_same_v<T, Cross>) return FamilyTag::Cross;
            else return a.family;
        },
        atom);
}

FamilyTag classify(const Sign& sign) {
    if (sign.atoms.size() > 1) return FamilyTag::Composite;
    return atom_family(sign.atoms.front());
}

bool contains_opaque(const Sign& sign) {
    return std::any_of(sign.atoms.begin(), sign.atoms.end(), [](const Atom& a) {
        return std::holds_alternative<Opaque>(a);
    });
}

bool well_formed(const Sign& sign) {
    if (sign.atoms.empty()) return false;
    for (const Atom& atom : sign.atoms) {
        bool ok = std::visit(
            [](const auto& a) -> bool {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, ScoreRow>)
                    return a.count >= 1 && a.rows >= 1 && a.rows <= a.count;
                else if constexpr (std::is_same_v<T, Comb>)
                    return a.teeth >= 1;
                else if constexpr (std::is_same_v<T, Pole>)
                    return a.crossings >= 1;
                else if constexpr (std::is_same_v<T, Divided>)
                    return a.left >= 0 && a.right >= 0 && a.left + a.right >= 1;
                else if constexpr (std::is_same_v<T, LongShort>)
                    return a.longs >= 1 && a.shorts >= 0;
                else
                    return true;
            },
            atom);
        if (!ok) return false;
    }
    return true;
}

Sign normalize(const Sign& sign, std::vector<std::string>* notes) {
    Sign out = sign;
    for (Atom& atom : out.atoms) {
        if (auto* d = std::get_if<Divided>(&atom); d && d->left < d->right) {
            std::swap(d->left, d->right);
            if (notes)
                notes->push_back("divided sides reordered to (" + std::to_string(d->left) +
                                 "," + std::to_string(d->right) + "); side order carries no meaning");
        }
    }
    return out;
}

std::vector<std::string> validation_warnings(const Sign& sign) {
    std::vector<std::string> warnings;
    for (const Atom& atom : sign.atoms) {
        if (const auto* c = std::get_if<Comb>(&atom)) {
            if (c->teeth < 3 || c->teeth > 8)
                warnings.push_back("comb with " + std::to_string(c->teeth) +
                                   " teeth is outside the attested range 3..8");
        }
    }
    return warnings;
}

}  // namespace oes
