#include "oes/interpret.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oes/notation.hpp"

namespace oes {

Hypothesis default_hypothesis() {
    return Hypothesis{};
}

std::optional<Hypothesis> hypothesis_by_name(const std::string& name) {
    Hypothesis h;
    h.name = name;
    if (name == "default") {
        return h;
    }
    if (name == "comb-n") {
        h.comb = CombRule{CombRule::Kind::NOnly, 0};
        return h;
    }
    if (name == "comb-n1") {
        h.comb = CombRule{CombRule::Kind::NPlusOne, 0};
        return h;
    }
    if (name == "comb-b9") {
        h.comb = CombRule{CombRule::Kind::BPlusN, 9};
        return h;
    }
    if (name.rfind("comb-nb:", 0) == 0) {
        const std::string digits = name.substr(8);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        const int b = std::stoi(digits);
        if (b < 2) return std::nullopt;
        h.comb = CombRule{CombRule::Kind::NTimesB, b};
        return h;
    }
    return std::nullopt;
}

std::string comb_rule_name(const CombRule& rule) {
    switch (rule.kind) {
        case CombRule::Kind::TenPlusN: return "10+n";
        case CombRule::Kind::NOnly: return "n";
        case CombRule::Kind::NPlusOne: return "n+1";
        case CombRule::Kind::NTimesB: return "n*" + std::to_string(rule.base);
        case CombRule::Kind::BPlusN: return std::to_string(rule.base) + "+n";
    }
    return "?";
}

std::vector<AtomReading> evaluate_atom(const Atom& atom, const Hypothesis& h) {
    std::vector<AtomReading> readings;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ScoreRow>) {
                // Row layout does not change the value; only base
                // inference cares about rows.
                readings.push_back({a.count, "score marks count themselves", false});
            } else if constexpr (std::is_same_v<T, Comb>) {
                switch (h.comb.kind) {
                    case CombRule::Kind::TenPlusN:
                        readings.push_back({10 + a.teeth, "comb: 10+n", false});
                        break;
                    case CombRule::Kind::NOnly:
                        readings.push_back({a.teeth, "comb: n", false});
                        break;
                    case CombRule::Kind::NPlusOne:
                        readings.push_back({a.teeth + 1, "comb: n+1", false});
                        break;
                    case CombRule::Kind::NTimesB:
                        readings.push_back(
                            {a.teeth * h.comb.base, "comb: " + comb_rule_name(h.comb), false});
                        break;
                    case CombRule::Kind::BPlusN:
                        readings.push_back(
                            {h.comb.base + a.teeth, "comb: " + comb_rule_name(h.comb), false});
                        break;
                }
            } else if constexpr (std::is_same_v<T, Pole>) {
                if (h.pole == PoleRule::TenPlusN || h.pole == PoleRule::Both)
                    readings.push_back({10 + a.crossings, "pole: 10+n", false});
                if (h.pole == PoleRule::NOnly || h.pole == PoleRule::Both)
                    readings.push_back({a.crossings, "pole: n", false});
            } else if constexpr (std::is_same_v<T, Divided>) {
                // General formula extrapolated from the single 9/6
                // exemplar; every divided trace says so.
                const int sum = a.left + a.right;
                if (h.divided == DividedRule::SumPlusTen || h.divided == DividedRule::Both)
                    readings.push_back(
                        {10 + sum, "divided: 10+a+b (generalized from the 9/6 exemplar)", false});
                if (h.divided == DividedRule::SumOnly || h.divided == DividedRule::Both)
                    readings.push_back(
                        {sum, "divided: a+b (generalized from the 9/6 exemplar)", false});
            } else if constexpr (std::is_same_v<T, LongShort>) {
                readings.push_back({h.longshort_unit * a.longs + a.shorts,
                                    "long/short: " + std::to_string(h.longshort_unit) + "m+n",
                                    false});
            } else if constexpr (std::is_same_v<T, Chevron>) {
                readings.push_back(
                    {h.chevron_value, "chevron: ?" + std::to_string(h.chevron_value), true});
            } else if constexpr (std::is_same_v<T, Cross>) {
                readings.push_back(
                    {h.cross_value, "cross: ?" + std::to_string(h.cross_value), true});
            } else {
                throw std::invalid_argument("atom of family '" + family_name(a.family) +
                                            "' is not evaluable from form");
            }
        },
        atom);
    return readings;
}

Interpretation evaluate(const Sign& sign, const Hypothesis& h) {
    if (contains_opaque(sign))
        throw std::invalid_argument("sign contains an opaque atom; value comes only from a claimed value");

    bool tentative = false;
    std::vector<std::vector<AtomReading>> per_atom;
    std::vector<std::string> atom_text;
    per_atom.reserve(sign.atoms.size());
    for (const Atom& atom : sign.atoms) {
        per_atom.push_back(evaluate_atom(atom, h));
        atom_text.push_back(render_sign(Sign{{atom}}));
        for (const AtomReading& r : per_atom.back())
            if (r.tentative) tentative = true;
    }

    // Cartesian combination, summed.
    std::vector<Candidate> combos;
    combos.push_back(Candidate{});
    for (std::size_t i = 0; i < per_atom.size(); ++i) {
        std::vector<Candidate> next;
        next.reserve(combos.size() * per_atom[i].size());
        for (const Candidate& c : combos) {
            for (const AtomReading& r : per_atom[i]) {
                Candidate extended = c;
                extended.value += r.value;
                extended.steps.push_back({atom_text[i], r.rule, r.value});
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }

    Interpretation out;
    out.combination_count = combos.size();
    out.confidence = tentative ? Confidence::Tentative : Confidence::Asserted;

    std::map<int, Candidate> by_value;
    for (Candidate& c : combos) {
        auto [it, inserted] = by_value.try_emplace(c.value, std::move(c));
        if (!inserted) out.deduplicated = true;
    }
    for (auto it = by_value.rbegin(); it != by_value.rend(); ++it)
        out.candidates.push_back(std::move(it->second));
    return out;
}

std::set<int> expressible_values(const Hypothesis& h, int max) {
    if (max < 1) throw std::invalid_argument("max must be >= 1");
    std::set<int> values;
    auto add = [&](const Atom& atom) {
        for (const AtomReading& r : evaluate_atom(atom, h))
            if (r.value >= 1 && r.value <= max) values.insert(r.value);
    };
    for (int c = 1; c <= kAttestedScoreMax; ++c) add(ScoreRow{c, 1});
    for (int t = kAttestedCombMin; t <= kAttestedCombMax; ++t) add(Comb{t});
    for (int n = 1; n <= kAttestedPoleMax; ++n) add(Pole{n});
    for (int a = 0; a <= kAttestedDividedSideMax; ++a)
        for (int b = 0; b <= kAttestedDividedSideMax; ++b)
            if (a + b >= 1) add(Divided{a, b});
    for (int m = 1; m <= kAttestedLongMax; ++m)
        for (int n = 0; n <= kAttestedShortMax; ++n) add(LongShort{m, n});
    add(Chevron{});
    add(Cross{});
    return values;
}

}  // namespace oes
