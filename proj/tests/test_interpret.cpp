#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "generators.hpp"
#include "oes/interpret.hpp"
#include "oes/notation.hpp"

using namespace oes;

namespace {

std::vector<int> values(const Interpretation& interp) {
    std::vector<int> out;
    for (const Candidate& c : interp.candidates) out.push_back(c.value);
    return out;
}

Interpretation eval_text(const std::string& text, const Hypothesis& h) {
    return evaluate(std::get<Sign>(parse_sign(text)), h);
}

}  // namespace

TEST_CASE("translation formulas under the default hypothesis") {
    const Hypothesis def = default_hypothesis();
    CHECK(values(eval_text("C5", def)) == std::vector<int>{15});
    CHECK(values(eval_text("D9,6", def)) == std::vector<int>{25, 15});
    CHECK(values(eval_text("L3S2", def)) == std::vector<int>{32});
    CHECK(values(eval_text("P4", def)) == std::vector<int>{14, 4});
    CHECK(values(eval_text("S7", def)) == std::vector<int>{7});
    CHECK(values(eval_text("V", def)) == std::vector<int>{10});
    CHECK(values(eval_text("X", def)) == std::vector<int>{20});
}

TEST_CASE("score marks count themselves under any hypothesis") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Hypothesis h = testing::random_hypothesis(rng);
        CHECK(values(eval_text("S7", h)) == std::vector<int>{7});
        CHECK(values(eval_text("S14x2", h)) == std::vector<int>{14});  // layout is value-neutral
    }
}

TEST_CASE("comb rule variants") {
    Hypothesis h = default_hypothesis();
    h.comb = {CombRule::Kind::NOnly, 0};
    CHECK(values(eval_text("C5", h)) == std::vector<int>{5});
    h.comb = {CombRule::Kind::NPlusOne, 0};
    CHECK(values(eval_text("C5", h)) == std::vector<int>{6});
    h.comb = {CombRule::Kind::NTimesB, 5};
    CHECK(values(eval_text("C5", h)) == std::vector<int>{25});
    h.comb = {CombRule::Kind::BPlusN, 9};
    CHECK(values(eval_text("C5", h)) == std::vector<int>{14});
}

TEST_CASE("ligatures combine additively over the Cartesian product") {
    const Hypothesis def = default_hypothesis();
    const Interpretation xv2 = eval_text("X;V;S2", def);
    CHECK(values(xv2) == std::vector<int>{32});
    CHECK(xv2.confidence == Confidence::Tentative);

    const Interpretation xx = eval_text("X;X", def);
    CHECK(values(xx) == std::vector<int>{40});
    CHECK(xx.confidence == Confidence::Tentative);

    // Per-atom choices enumerated by hand: {13,3} + {2} = {15,5}.
    const Interpretation p3s2 = eval_text("P3;S2", def);
    CHECK(values(p3s2) == std::vector<int>{15, 5});
    CHECK(p3s2.confidence == Confidence::Asserted);
    CHECK(p3s2.combination_count == 2);
}

TEST_CASE("confidence is tentative exactly when a chevron or cross is present") {
    const Hypothesis def = default_hypothesis();
    CHECK(eval_text("C5;S2", def).confidence == Confidence::Asserted);
    CHECK(eval_text("V;C5", def).confidence == Confidence::Tentative);
}

TEST_CASE("opaque atoms are non-evaluable") {
    CHECK_THROWS_AS(evaluate(Sign{{Opaque{FamilyTag::Pole}}}, default_hypothesis()),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_atom(Opaque{FamilyTag::Comb}, default_hypothesis()),
                    std::invalid_argument);
}

TEST_CASE("deduplication is recorded, not silent") {
    // P1;P1 under Both: {11,1}+{11,1} sums to {22,12,12,2}; 12 occurs twice.
    const Interpretation interp = eval_text("P1;P1", default_hypothesis());
    CHECK(interp.combination_count == 4);
    CHECK(interp.deduplicated);
    CHECK(values(interp) == std::vector<int>{22, 12, 2});
}

TEST_CASE("hypothesis presets resolve by name") {
    CHECK(hypothesis_by_name("default"));
    CHECK(hypothesis_by_name("comb-n")->comb.kind == CombRule::Kind::NOnly);
    CHECK(hypothesis_by_name("comb-n1")->comb.kind == CombRule::Kind::NPlusOne);
    CHECK(hypothesis_by_name("comb-b9")->comb == CombRule{CombRule::Kind::BPlusN, 9});
    CHECK(hypothesis_by_name("comb-nb:10")->comb == CombRule{CombRule::Kind::NTimesB, 10});
    CHECK_FALSE(hypothesis_by_name("nope"));
    CHECK_FALSE(hypothesis_by_name("comb-nb:1"));
    CHECK_FALSE(hypothesis_by_name("comb-nb:x"));
}

namespace {

// Independent brute-force oracle: enumerate every attested single-atom
// form directly, without going through expressible_values.
std::set<int> oracle_expressible(const Hypothesis& h, int max) {
    std::set<int> out;
    auto consider = [&](std::vector<int> candidates) {
        for (int v : candidates)
            if (v >= 1 && v <= max) out.insert(v);
    };
    for (int c = 1; c <= 9; ++c) consider({c});
    for (int t = 3; t <= 8; ++t) {
        switch (h.comb.kind) {
            case CombRule::Kind::TenPlusN: consider({10 + t}); break;
            case CombRule::Kind::NOnly: consider({t}); break;
            case CombRule::Kind::NPlusOne: consider({t + 1}); break;
            case CombRule::Kind::NTimesB: consider({t * h.comb.base}); break;
            case CombRule::Kind::BPlusN: consider({h.comb.base + t}); break;
        }
    }
    for (int n = 1; n <= 9; ++n) {
        if (h.pole != PoleRule::NOnly) consider({10 + n});
        if (h.pole != PoleRule::TenPlusN) consider({n});
    }
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= 9; ++b) {
            if (a + b < 1) continue;
            if (h.divided != DividedRule::SumOnly) consider({10 + a + b});
            if (h.divided != DividedRule::SumPlusTen) consider({a + b});
        }
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 9; ++n) consider({h.longshort_unit * m + n});
    consider({h.chevron_value});
    consider({h.cross_value});
    return out;
}

}  // namespace

TEST_CASE("expressible_values matches the brute-force oracle") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Hypothesis h = testing::random_hypothesis(rng);
        for (int max : {1, 5, 20, 42, 100})
            CHECK(expressible_values(h, max) == oracle_expressible(h, max));
    }
}

TEST_CASE("expressibility under the default hypothesis covers 1..20") {
    const std::set<int> reachable = expressible_values(default_hypothesis(), 20);
    for (int v = 1; v <= 20; ++v) CHECK(reachable.count(v) == 1);
}

TEST_CASE("comb-n combs only duplicate existing score values") {
    Hypothesis h = *hypothesis_by_name("comb-n");
    const std::set<int> with_combs = expressible_values(h, 20);
    // combs contribute 3..8 only, already covered by scores
    for (int t = 3; t <= 8; ++t) CHECK(with_combs.count(t) == 1);
    CHECK(with_combs == oracle_expressible(h, 20));
}

TEST_CASE("expressible_values rejects max < 1; max = 1 reaches only S1") {
    CHECK_THROWS_AS(expressible_values(default_hypothesis(), 0), std::invalid_argument);
    CHECK(expressible_values(default_hypothesis(), 1) == std::set<int>{1});
}

TEST_CASE("trace soundness and Cartesian-count over random signs and hypotheses") {
    std::mt19937 rng(23);
    for (int i = 0; i < 5000; ++i) {
        const Sign sign = testing::random_sign(rng);
        const Hypothesis h = testing::random_hypothesis(rng);
        const Interpretation interp = evaluate(sign, h);
        REQUIRE_FALSE(interp.candidates.empty());
        std::size_t expected_combos = 1;
        for (const Atom& atom : sign.atoms) expected_combos *= evaluate_atom(atom, h).size();
        CHECK(interp.combination_count == expected_combos);
        if (!interp.deduplicated) CHECK(interp.candidates.size() == expected_combos);
        for (const Candidate& c : interp.candidates) {
            const int sum = std::accumulate(c.steps.begin(), c.steps.end(), 0,
                                            [](int acc, const TraceStep& s) {
                                                return acc + s.contribution;
                                            });
            CHECK(c.value == sum);
        }
    }
}

TEST_CASE("permuting ligature atoms preserves the candidate set") {
    std::mt19937 rng(29);
    for (int i = 0; i < 1000; ++i) {
        Sign sign = testing::random_sign(rng);
        const Hypothesis h = testing::random_hypothesis(rng);
        const std::vector<int> before = values(evaluate(sign, h));
        std::shuffle(sign.atoms.begin(), sign.atoms.end(), rng);
        CHECK(values(evaluate(sign, h)) == before);
    }
}
