#pragma once

// Hand-rolled generators for property tests over random signs and
// hypotheses. Deterministic given the engine's seed.

#include <random>

#include "oes/interpret.hpp"
#include "oes/sign.hpp"

namespace oes::testing {

inline Atom random_atom(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> small(1, 20);
    std::uniform_int_distribution<int> side(0, 12);
    switch (pick(rng)) {
        case 0: {
            const int count = small(rng);
            std::uniform_int_distribution<int> rows(1, count);
            return ScoreRow{count, rows(rng)};
        }
        case 1: return Comb{small(rng)};
        case 2: return Pole{small(rng)};
        case 3: {
            int left = side(rng), right = side(rng);
            if (left + right == 0) left = 1;
            return Divided{left, right};
        }
        case 4: return LongShort{small(rng), side(rng)};
        case 5: return Chevron{};
        default: return Cross{};
    }
}

inline Sign random_sign(std::mt19937& rng) {
    std::uniform_int_distribution<int> length(1, 4);
    Sign sign;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) sign.atoms.push_back(random_atom(rng));
    return sign;
}

inline Hypothesis random_hypothesis(std::mt19937& rng) {
    Hypothesis h;
    h.name = "random";
    std::uniform_int_distribution<int> comb_kind(0, 4);
    std::uniform_int_distribution<int> base(2, 12);
    h.comb.kind = static_cast<CombRule::Kind>(comb_kind(rng));
    if (h.comb.kind == CombRule::Kind::NTimesB || h.comb.kind == CombRule::Kind::BPlusN)
        h.comb.base = base(rng);
    std::uniform_int_distribution<int> three(0, 2);
    h.pole = static_cast<PoleRule>(three(rng));
    h.divided = static_cast<DividedRule>(three(rng));
    std::uniform_int_distribution<int> value(1, 30);
    h.chevron_value = value(rng);
    do {
        h.cross_value = value(rng);
    } while (h.cross_value == h.chevron_value);
    std::uniform_int_distribution<int> unit(2, 12);
    h.longshort_unit = unit(rng);
    return h;
}

}  // namespace oes::testing
