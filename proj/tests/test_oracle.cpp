#include <doctest.h>

#include "gfgaut/constructions.hpp"
#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"
#include "gfgaut/oracle.hpp"
#include "gfgaut/products.hpp"

#include <random>

using namespace gfgaut;

TEST_CASE("rank complement: exact complement on small random NBWs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Automaton n = fixtures::random_nbw(rng, 3, 2);
        Automaton c = rank_complement(n);
        for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
            INFO("trial ", trial, " word ", render_lasso(w, n.alphabet));
            CHECK(accepts(c, w) == !accepts(n, w));
        }
    }
    for (int trial = 0; trial < 8; ++trial) {
        Automaton n = fixtures::random_nbw(rng, 4, 2);
        Automaton c = rank_complement(n);
        for (const LassoWord& w : enumerate_lassos(2, 4, 4)) {
            INFO("4-state trial ", trial, " word ", render_lasso(w, n.alphabet));
            CHECK(accepts(c, w) == !accepts(n, w));
        }
    }
}

TEST_CASE("rank complement of the f2 breakpoint form") {
    Automaton na = breakpoint(fixtures::f2());
    CHECK(na.num_states() <= 12);
    Automaton c = rank_complement(na);
    for (const LassoWord& w : enumerate_lassos(2, 4, 4))
        CHECK(accepts(c, w) == !accepts(fixtures::f2(), w));
}

TEST_CASE("nondet/det intersection emptiness finds witnesses") {
    std::optional<WordWitness> w;
    // L(f2) and complement(L(d2)) are disjoint
    CHECK(!nondet_inter_det_nonempty(breakpoint(fixtures::f2()), dualize(fixtures::d2()), &w));
    CHECK(!w.has_value());
    // L(f1) intersects complement(L(f2)) (e.g. (ab)^w)
    Automaton f1 = fixtures::f1();
    CHECK(nondet_inter_det_nonempty(breakpoint(f1), fixtures::d4(), &w));
    REQUIRE(w.has_value());
    LassoWord lw = LassoWord::make(w->prefix, w->period);
    CHECK(accepts(f1, lw));
    CHECK(!accepts(fixtures::f2(), lw));
}

TEST_CASE("reference_check on the fixture corpus") {
    CheckVerdict v1 = reference_check(fixtures::f1(), fixtures::f1(), 4);
    CHECK(v1.kind == VerdictKind::Verified); // syntactic identity

    CheckVerdict v2 = reference_check(fixtures::f2(), fixtures::d2(), 4);
    CHECK(v2.kind == VerdictKind::Verified);
    CHECK(v2.detail == "tier-1 + tier-2 exact");

    CheckVerdict bad = reference_check(fixtures::f2(), fixtures::f1(), 4);
    CHECK(bad.kind == VerdictKind::Falsified);
    REQUIRE(bad.witness.has_value());
    LassoWord w = LassoWord::make(bad.witness->prefix, bad.witness->period);
    CHECK(accepts(fixtures::f1(), w));
    CHECK(!accepts(fixtures::f2(), w));

    CheckVerdict v4 = reference_check(fixtures::f4(), fixtures::d4(), 4);
    CHECK(v4.kind == VerdictKind::Verified);

    CheckVerdict v3 = reference_check(fixtures::f3(), fixtures::d3(), 4);
    CHECK(v3.kind == VerdictKind::Verified);
}

TEST_CASE("reference_check catches wrong references in both directions") {
    // too small: d3-like automaton over {a,b} accepting everything vs f2
    Automaton f2 = fixtures::f2();
    CheckVerdict v = reference_check(f2, fixtures::f1(), 4);
    CHECK(v.kind == VerdictKind::Falsified);

    // too large: f1 against d2 as reference
    CheckVerdict v2 = reference_check(fixtures::f1(), fixtures::d2(), 4);
    CHECK(v2.kind == VerdictKind::Falsified);
    REQUIRE(v2.witness.has_value());
}

TEST_CASE("equivalence verdicts") {
    CHECK(equivalence(fixtures::f2(), fixtures::f2(), 3).kind == VerdictKind::Verified);
    // f3 is equivalent to the one-state a^w automaton
    CHECK(equivalence(fixtures::f3(), fixtures::d3(), 3).kind == VerdictKind::Verified);
    CheckVerdict v = equivalence(fixtures::f1(), fixtures::f2(), 3);
    CHECK(v.kind == VerdictKind::Falsified);
    REQUIRE(v.witness.has_value());

    // both sides nondeterministic, equal languages: bounded verdict only
    Automaton f3b = fixtures::f3();
    f3b.name = "f3b";
    Automaton narrowed = f3b;
    narrowed.set_cond(0, 0, Cond::leaf(1)); // p goes to q only; q still guesses
    CheckVerdict nv = equivalence(f3b, narrowed, 3);
    CHECK(nv.kind != VerdictKind::Falsified);
}

TEST_CASE("equivalence is exact for finite-word automata") {
    Automaton nfa = fixtures::redundant_or_nfa(4);
    Automaton dfa = fixtures::cycle_dfa(4);
    CHECK(equivalence(nfa, dfa, 0).kind == VerdictKind::Verified);
    Automaton other = fixtures::cycle_dfa(5);
    CheckVerdict v = equivalence(nfa, other, 0);
    CHECK(v.kind == VerdictKind::Falsified);
    REQUIRE(v.witness.has_value());
    CHECK(!v.witness->is_lasso());
    CHECK(accepts_finite(nfa, v.witness->prefix) != accepts_finite(other, v.witness->prefix));
}

TEST_CASE("monotone budgets refine not-falsified only") {
    Automaton f3b = fixtures::f3();
    Automaton narrowed = f3b;
    narrowed.name = "w";
    narrowed.set_cond(0, 0, Cond::leaf(1));
    for (uint32_t b = 1; b <= 4; ++b)
        CHECK(equivalence(f3b, narrowed, b).kind == VerdictKind::NotFalsified);
}

TEST_CASE("random obfuscations verify against their reference") {
    std::mt19937_64 rng(55);
    int verified = 0;
    for (int trial = 0; trial < 25; ++trial) {
        fixtures::RandomPair p = fixtures::random_obfuscated(rng, 3, 2);
        CheckVerdict v = reference_check(p.aut, p.ref, 4);
        CHECK(v.kind != VerdictKind::Falsified);
        if (v.kind == VerdictKind::Verified) ++verified;
        // exhaustive cross-check of language equality on small lassos
        for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
            INFO("trial ", trial, " word ", render_lasso(w, p.aut.alphabet));
            CHECK(accepts(p.aut, w) == accepts(p.ref, w));
        }
    }
    CHECK(verified >= 20); // tier-2 exactness is the norm at this size
}

TEST_CASE("composition_test: deterministic automata never discriminate") {
    CompositionReport rep = composition_test(fixtures::d2(), fixtures::d2(), 6, 25, 99);
    CHECK(rep.discrepancies == 0);
    CHECK(!rep.counter_arena_included);
    CHECK(rep.gfg.gfg());
}

TEST_CASE("composition_test: f2's counter arena discriminates (trial 0)") {
    CompositionReport rep = composition_test(fixtures::f2(), fixtures::d2(), 6, 10, 3);
    CHECK(rep.counter_arena_included);
    CHECK(rep.counter_arena_discriminates);
    CHECK(rep.discrepancies >= 1);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures.front().variant == "counter-arena");
    // the serialized arena parses back
    Arena g = parse_arena(rep.failures.front().arena_text);
    CHECK(g.root.has_value());
}

TEST_CASE("composition_test: f3 is clean over many arenas") {
    CompositionReport rep = composition_test(fixtures::f3(), fixtures::d3(), 8, 67, 7);
    CHECK(rep.games_compared >= 200);
    CHECK(rep.discrepancies == 0);
}

TEST_CASE("composition_test refuses non-deterministic or wrong references") {
    CHECK_THROWS_AS(composition_test(fixtures::f3(), fixtures::f2(), 4, 2, 1), Error);
    CHECK_THROWS_AS(composition_test(fixtures::f2(), fixtures::d4(), 4, 2, 1), Error);
}

TEST_CASE("align_alphabet permutes letters by name") {
    Automaton d2 = fixtures::d2();
    Automaton flipped = d2;
    flipped.alphabet = {"b", "a"};
    flipped.resize_delta();
    for (StateId q = 0; q < d2.num_states(); ++q) {
        flipped.set_cond(q, 0, d2.cond(q, 1));
        flipped.set_cond(q, 1, d2.cond(q, 0));
    }
    Automaton aligned = align_alphabet(flipped, d2.alphabet);
    CHECK(det_language_equal(aligned, d2));
    CHECK_THROWS_AS(align_alphabet(fixtures::d3(), d2.alphabet), Error);
}
