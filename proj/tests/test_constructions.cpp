#include <doctest.h>

#include "gfgaut/constructions.hpp"
#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"
#include "gfgaut/gfg.hpp"
#include "gfgaut/oracle.hpp"
#include "gfgaut/products.hpp"

#include <random>

using namespace gfgaut;

TEST_CASE("breakpoint: deterministic input stays isomorphic") {
    Automaton d = fixtures::gfg_abw_ref();
    Automaton bp = breakpoint(d);
    CHECK(bp.num_states() == d.num_states());
    CHECK(is_deterministic(bp));
    for (const LassoWord& w : enumerate_lassos(2, 4, 4)) CHECK(accepts(bp, w) == accepts(d, w));
}

TEST_CASE("breakpoint on the conjunctive ABW example") {
    Automaton a = fixtures::abw_conjunction();
    Automaton bp = breakpoint(a);
    CHECK(classify(bp) != TransitionMode::Alternating);
    CHECK(!bp.acceptance.set.empty());
    size_t bound = 1;
    for (size_t i = 0; i < a.num_states(); ++i) bound *= 3;
    CHECK(bp.num_states() <= bound);
    for (const LassoWord& w : enumerate_lassos(2, 4, 4)) {
        INFO(render_lasso(w, a.alphabet));
        CHECK(accepts(bp, w) == accepts(a, w));
    }
}

TEST_CASE("breakpoint preserves the language on random ABWs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Automaton a = fixtures::random_alternating(rng, 3, 2, AccKind::Buchi);
        Automaton bp = breakpoint(a);
        for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
            INFO("trial ", trial, " word ", render_lasso(w, a.alphabet));
            CHECK(accepts(bp, w) == accepts(a, w));
        }
    }
}

TEST_CASE("breakpoint preserves GFGness on the GFG fixtures") {
    // the translation must keep the nondeterminism compliant
    struct Case {
        Automaton a, ref;
    };
    for (auto& [a, ref] :
         {Case{fixtures::gfg_abw(), fixtures::gfg_abw_ref()}, Case{fixtures::f3(), fixtures::d3()},
          Case{fixtures::abw_conjunction(), fixtures::abw_conjunction_ref()}}) {
        Automaton bp = breakpoint(a);
        GfgVerdict v = is_gfg(bp, ref);
        CHECK(v.nondeterminism_compliant);
        CHECK(v.universality_compliant); // vacuous: output is nondeterministic
    }
}

TEST_CASE("breakpoint rejects non-Buchi input") {
    CHECK_THROWS_AS(breakpoint(fixtures::f4()), Error);
    CHECK_THROWS_AS(breakpoint(fixtures::cycle_dfa(3)), Error);
}

TEST_CASE("subset construction") {
    Automaton dfa = fixtures::cycle_dfa(3);
    Automaton same = subset_construction(dfa);
    CHECK(same.num_states() == dfa.num_states());
    CHECK(is_deterministic(same));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Automaton nfa = fixtures::random_alternating(rng, 4, 2, AccKind::FiniteWords);
        // restrict to nondeterministic shapes for the classic construction
        Automaton nd = finite_alternation_removal(nfa);
        Automaton det = subset_construction(nd);
        CHECK(is_deterministic(det));
        CHECK(det.num_states() <= ((size_t)1 << nd.num_states()));
        for (const auto& w : enumerate_words(2, 6)) {
            INFO("trial ", trial);
            CHECK(accepts_finite(det, w) == accepts_finite(nfa, w));
        }
    }
    CHECK_THROWS_AS(subset_construction(fixtures::f2()), Error);
}

TEST_CASE("hopcroft minimization") {
    // duplicate states collapse back to the cycle size
    for (uint32_t n = 3; n <= 6; ++n) {
        Automaton nfa = fixtures::redundant_or_nfa(n);
        Automaton det = subset_construction(nfa);
        Automaton min = hopcroft_minimize(det);
        CHECK(min.num_states() == n);
        CHECK(dfa_residual_classes(det) == n);
        for (const auto& w : enumerate_words(2, 6))
            CHECK(accepts_finite(min, w) == accepts_finite(nfa, w));
    }
    // already-minimal input is untouched in size
    Automaton dfa = fixtures::cycle_dfa(5);
    CHECK(hopcroft_minimize(dfa).num_states() == 5);
}

TEST_CASE("hopcroft agrees with Moore refinement on random DFAs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        fixtures::RandomPair p = fixtures::random_obfuscated(rng, 4, 2);
        Automaton d = p.ref;
        d.acceptance = Acceptance::finite_words(d.acceptance.set);
        CHECK(hopcroft_minimize(d).num_states() == dfa_residual_classes(d));
    }
}

TEST_CASE("gfg_acw_to_dcw on the deterministic fixture") {
    Automaton d = fixtures::dcw_fin_b();
    Automaton out = gfg_acw_to_dcw(d, d);
    CHECK(is_deterministic(out));
    CHECK(out.acceptance.kind == AccKind::CoBuchi);
    CHECK(det_language_equal(out, d));
}

TEST_CASE("gfg_acw_to_dcw on the alternating GFG co-Buchi fixture") {
    Automaton acw = fixtures::gfg_acw();
    Automaton ref = fixtures::gfg_acw_ref();
    Automaton out = gfg_acw_to_dcw(acw, ref);
    CHECK(is_deterministic(out));
    CHECK(out.acceptance.kind == AccKind::CoBuchi);
    for (const LassoWord& w : enumerate_lassos(2, 4, 4)) {
        INFO(render_lasso(w, acw.alphabet));
        CHECK(accepts(out, w) == accepts(acw, w));
    }
    CHECK(reference_check(out, ref, 4).kind == VerdictKind::Verified);
}

TEST_CASE("gfg_acw_to_dcw rejects non-GFG and non-co-Buchi inputs") {
    CHECK_THROWS_AS(gfg_acw_to_dcw(fixtures::f2(), fixtures::d2()), Error);
    try {
        gfg_acw_to_dcw(fixtures::f4(), fixtures::d4());
        FAIL("expected NotGfg");
    } catch (const NotGfg& e) {
        CHECK(!e.verdict.universality_compliant);
    }
}

TEST_CASE("pipeline coherence with the dual route") {
    // acw pipeline == dualize(determinize-pipeline(dualize(acw)))
    Automaton acw = fixtures::gfg_acw();
    Automaton ref = fixtures::gfg_acw_ref();
    Automaton via_pipeline = gfg_acw_to_dcw(acw, ref);

    Automaton abw = dualize(acw);
    Automaton abw_ref = dualize(ref);
    Automaton nbw = breakpoint(abw);
    auto [m_e, m_a] = extract_hd_transducers(nbw, abw_ref);
    Automaton direct = dualize(determinize_gfg(nbw, m_e, m_a));
    CHECK(det_language_equal(via_pipeline, direct));
}
