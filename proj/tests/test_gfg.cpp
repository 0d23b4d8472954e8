#include <doctest.h>

#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"
#include "gfgaut/gfg.hpp"
#include "gfgaut/oracle.hpp"
#include "gfgaut/products.hpp"

#include <random>

using namespace gfgaut;

namespace {

bool eve_wins(const ParityGame& g) { return solve_parity(g).eve_wins(*g.root); }

} // namespace

TEST_CASE("is_gfg on the fixture corpus") {
    GfgVerdict det = is_gfg(fixtures::d2(), fixtures::d2());
    CHECK(det.gfg());
    CHECK(det.eve_witness->memory_count() == 1);
    CHECK(det.adam_witness->memory_count() == 1);

    GfgVerdict f2 = is_gfg(fixtures::f2(), fixtures::d2());
    CHECK(!f2.nondeterminism_compliant);
    CHECK(f2.universality_compliant);
    CHECK(!f2.gfg());
    CHECK(f2.adam_counter.has_value());

    GfgVerdict f3 = is_gfg(fixtures::f3(), fixtures::d3());
    CHECK(f3.gfg());

    GfgVerdict f4 = is_gfg(fixtures::f4(), fixtures::d4());
    CHECK(f4.nondeterminism_compliant);
    CHECK(!f4.universality_compliant);
    CHECK(f4.eve_counter.has_value());

    GfgVerdict abw = is_gfg(fixtures::gfg_abw(), fixtures::gfg_abw_ref());
    CHECK(abw.gfg());
}

TEST_CASE("duality: nondeterminism of a vs universality of dualize(a)") {
    struct Case {
        Automaton a, ref;
    };
    for (auto& [a, ref] : {Case{fixtures::f2(), fixtures::d2()},
                           Case{fixtures::f3(), fixtures::d3()},
                           Case{fixtures::gfg_abw(), fixtures::gfg_abw_ref()}}) {
        GfgVerdict v = is_gfg(a, ref);
        GfgVerdict dv = is_gfg(dualize(a), dualize(ref));
        CHECK(v.nondeterminism_compliant == dv.universality_compliant);
        CHECK(v.universality_compliant == dv.nondeterminism_compliant);
    }
}

TEST_CASE("format invariance: is_gfg agrees across DNF and CNF forms") {
    struct Case {
        Automaton a, ref;
    };
    for (auto& [a, ref] : {Case{fixtures::f2(), fixtures::d2()},
                           Case{fixtures::f3(), fixtures::d3()},
                           Case{fixtures::f4(), fixtures::d4()},
                           Case{fixtures::gfg_abw(), fixtures::gfg_abw_ref()}}) {
        GfgVerdict base = is_gfg(a, ref);
        GfgVerdict dnf = is_gfg(normalize(a, NormalForm::Dnf), ref);
        GfgVerdict cnf = is_gfg(normalize(a, NormalForm::Cnf), ref);
        CHECK(base.gfg() == dnf.gfg());
        CHECK(base.gfg() == cnf.gfg());
        CHECK(base.nondeterminism_compliant == dnf.nondeterminism_compliant);
        CHECK(base.nondeterminism_compliant == cnf.nondeterminism_compliant);
        CHECK(base.universality_compliant == dnf.universality_compliant);
        CHECK(base.universality_compliant == cnf.universality_compliant);
    }
}

TEST_CASE("extracted witnesses replay into model-checking games") {
    Automaton f3 = fixtures::f3();
    auto [m_e, m_a] = extract_hd_transducers(f3, fixtures::d3());
    Automaton dnf = normalize(f3, NormalForm::Dnf);
    // every word of L(f3) must be won by the replayed Eve witness
    for (const LassoWord& w : enumerate_lassos(1, 4, 4)) {
        if (!accepts(f3, w)) continue;
        ParityGame g = mc_replay_game(dnf, w, m_e, Player::Eve);
        CHECK(eve_wins(g));
    }

    Automaton abw = fixtures::gfg_abw();
    Automaton ref = fixtures::gfg_abw_ref();
    auto [e2, a2] = extract_hd_transducers(abw, ref);
    Automaton abw_dnf = normalize(abw, NormalForm::Dnf);
    for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
        if (accepts(abw, w)) {
            ParityGame g = mc_replay_game(abw_dnf, w, e2, Player::Eve);
            INFO("accepting word ", render_lasso(w, abw.alphabet));
            CHECK(eve_wins(g));
        } else {
            // replaying M_A on any rejected word wins for Adam
            ParityGame g = mc_replay_game(abw_dnf, w, a2, Player::Adam);
            INFO("rejected word ", render_lasso(w, abw.alphabet));
            CHECK(!eve_wins(g));
        }
    }
}

TEST_CASE("letter-game replay: the extracted witness wins the whole game") {
    Automaton f3 = fixtures::f3();
    LetterGame lg = build_eve_letter_game(f3, fixtures::d3());
    LetterGameVerdict v = solve_letter_game(lg);
    REQUIRE(v.compliant);
    ParityGame replay = letter_replay_game(lg, *v.witness);
    CHECK(eve_wins(replay));
    // Eve's moves are fixed by the transducer: no branching at her vertices
    for (Vertex x = 0; x < replay.size(); ++x)
        if (replay.eve_owned[x]) CHECK(replay.succ[x].size() <= 1);
}

TEST_CASE("counterexample word falsifies a bad candidate strategy") {
    Automaton f2 = fixtures::f2();
    Automaton dnf = normalize(f2, NormalForm::Dnf);
    LetterGame lg = build_eve_letter_game(f2, fixtures::d2());
    LetterGameVerdict v = solve_letter_game(lg);
    REQUIRE(!v.compliant);

    // a candidate that resolves the guess positionally (always to qa)
    StateId qa = *dnf.state_index("qa");
    auto pick_clause = [&](StateId, LetterId, const ClauseList& cl) {
        for (uint32_t i = 0; i < cl.size(); ++i)
            if (cl[i] == Clause{qa}) return i;
        return 0u;
    };
    auto pick_state = [](StateId, LetterId, const Clause& c) { return c.front(); };
    auto [cand, cand_a] = uniform_witnesses(dnf, pick_clause, pick_state);

    LassoWord w = counterexample_word(lg, v.solution, cand);
    INFO("counterexample ", render_lasso(w, f2.alphabet));
    CHECK(accepts(f2, w)); // the counter forces a word of the language
    ParityGame g = mc_replay_game(dnf, w, cand, Player::Eve);
    CHECK(!eve_wins(g)); // which the candidate loses
}

TEST_CASE("counterexample words beat every positional candidate of f2") {
    Automaton f2 = fixtures::f2();
    Automaton dnf = normalize(f2, NormalForm::Dnf);
    LetterGame lg = build_eve_letter_game(f2, fixtures::d2());
    LetterGameVerdict v = solve_letter_game(lg);
    REQUIRE(!v.compliant);
    // all per-(state,letter) clause picks
    std::vector<std::pair<StateId, LetterId>> slots;
    std::vector<uint32_t> widths;
    for (StateId q = 0; q < dnf.num_states(); ++q)
        for (LetterId x = 0; x < dnf.num_letters(); ++x) {
            slots.push_back({q, x});
            widths.push_back((uint32_t)dnf_shape_clauses(dnf.cond(q, x)).size());
        }
    std::vector<uint32_t> pick(slots.size(), 0);
    while (true) {
        auto pick_clause = [&](StateId q, LetterId x, const ClauseList&) {
            for (size_t i = 0; i < slots.size(); ++i)
                if (slots[i] == std::make_pair(q, x)) return pick[i];
            return 0u;
        };
        auto pick_state = [](StateId, LetterId, const Clause& c) { return c.front(); };
        auto [cand, cand_a] = uniform_witnesses(dnf, pick_clause, pick_state);
        LassoWord w = counterexample_word(lg, v.solution, cand);
        CHECK(accepts(f2, w));
        CHECK(!eve_wins(mc_replay_game(dnf, w, cand, Player::Eve)));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < widths[i]) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
}

TEST_CASE("determinize_gfg: deterministic input with trivial witnesses is isomorphic") {
    Automaton d2 = fixtures::d2();
    Transducer te = Transducer::trivial("e");
    Transducer ta = Transducer::trivial("a");
    Automaton det = determinize_gfg(d2, te, ta);
    CHECK(det.num_states() == d2.num_states()); // all of d2 is reachable
    CHECK(det.acceptance.kind == AccKind::CoBuchi);
    CHECK(det_language_equal(det, d2));
}

TEST_CASE("determinize_gfg on f3") {
    Automaton f3 = fixtures::f3();
    auto [m_e, m_a] = extract_hd_transducers(f3, fixtures::d3());
    Automaton det = determinize_gfg(f3, m_e, m_a);
    CHECK(is_deterministic(det));
    CHECK(det.acceptance.kind == AccKind::Buchi);
    CHECK(det.num_states() <= f3.num_states() * m_a.memory_count() * m_e.memory_count());
    for (const LassoWord& w : enumerate_lassos(1, 4, 4))
        CHECK(accepts(det, w) == accepts(f3, w));
    CHECK(equivalence(det, f3, 4).kind == VerdictKind::Verified);
}

TEST_CASE("determinize_gfg on the alternating GFG fixture") {
    Automaton abw = fixtures::gfg_abw();
    Automaton ref = fixtures::gfg_abw_ref();
    auto [m_e, m_a] = extract_hd_transducers(abw, ref);
    Automaton det = determinize_gfg(abw, m_e, m_a);
    CHECK(is_deterministic(det));
    CHECK(det.acceptance.kind == abw.acceptance.kind);
    CHECK(det.num_states() <= abw.num_states() * m_a.memory_count() * m_e.memory_count());
    CHECK(reference_check(det, ref, 4).kind == VerdictKind::Verified);
}

TEST_CASE("extract_hd_transducers rejects non-GFG input with the counter strategy") {
    try {
        extract_hd_transducers(fixtures::f2(), fixtures::d2());
        FAIL("expected NotGfg");
    } catch (const NotGfg& e) {
        CHECK(!e.verdict.nondeterminism_compliant);
        CHECK(e.verdict.adam_counter.has_value());
    }
}

TEST_CASE("residual_check on the redundant-Or family") {
    for (uint32_t n = 3; n <= 6; ++n) {
        Automaton a = fixtures::redundant_or_nfa(n);
        ResidualReport rep = residual_check_with_reference(a, fixtures::cycle_dfa(n));
        INFO("family size ", n);
        CHECK(rep.pass);
        CHECK(rep.minimal_deterministic_size == n);
        CHECK(rep.residual_classes == n);
        CHECK(rep.automaton_states == n + 1);
    }
}

TEST_CASE("residual_check on weak fixtures") {
    // one-state all-accepting weak automaton: one class
    Automaton all = fixtures::weak_all();
    auto [te, ta] = extract_hd_transducers(all, all);
    ResidualReport rep = residual_check(all, te, ta);
    CHECK(rep.pass);
    CHECK(rep.residual_classes == 1);

    for (uint32_t n = 3; n <= 5; ++n) {
        Automaton a = fixtures::redundant_or_weak(n);
        ResidualReport wr = residual_check_with_reference(a, fixtures::weak_cycle(n));
        INFO("weak family size ", n);
        CHECK(wr.pass);
        CHECK(wr.minimal_deterministic_size <= a.num_states());
    }
}

TEST_CASE("deterministic minimal DFA passes residual_check with equality") {
    Automaton dfa = fixtures::cycle_dfa(4);
    ResidualReport rep = residual_check_with_reference(dfa, dfa);
    CHECK(rep.pass);
    CHECK(rep.minimal_deterministic_size == 4);
    CHECK(rep.residual_classes == 4);
}

TEST_CASE("residual_check rejects unsupported acceptance kinds") {
    Transducer t = Transducer::trivial("t");
    CHECK_THROWS_AS(residual_check(fixtures::f2(), t, t), Error);
}

TEST_CASE("counter strategies become discriminating one-player arenas") {
    // nondeterminism failure: Adam's counter becomes an all-Adam arena
    // whose two winners disagree
    Automaton f2 = fixtures::f2();
    GfgVerdict v2 = is_gfg(f2, fixtures::d2());
    REQUIRE(v2.adam_counter.has_value());
    Arena g2 = transducer_to_one_player_game(*v2.adam_counter, f2.alphabet, Player::Adam);
    for (size_t v = 0; v < g2.size(); ++v) CHECK(!g2.eve_owned[v]);
    ParityGame ref_side = synchronized_product(g2, fixtures::d2());
    ParityGame aut_side = synchronized_product(g2, f2);
    CHECK(eve_wins(ref_side));  // every play of the arena stays in L(f2)
    CHECK(!eve_wins(aut_side)); // yet Adam wins the product

    // universality failure: Eve's counter becomes an all-Eve arena
    Automaton f4 = fixtures::f4();
    GfgVerdict v4 = is_gfg(f4, fixtures::d4());
    REQUIRE(v4.eve_counter.has_value());
    Arena g4 = transducer_to_one_player_game(*v4.eve_counter, f4.alphabet, Player::Eve);
    for (size_t v = 0; v < g4.size(); ++v) CHECK(g4.eve_owned[v]);
    ParityGame ref4 = synchronized_product(g4, fixtures::d4());
    ParityGame aut4 = synchronized_product(g4, f4);
    CHECK(!eve_wins(ref4)); // every play's word falls outside L(f4)
    CHECK(eve_wins(aut4));  // yet Eve wins the product
}

TEST_CASE("for nondeterministic automata a universal arena already discriminates") {
    // f2 is nondeterministic and not GFG: the discriminating one-player
    // arena from the letter game is all-Adam, i.e. a universal witness
    // exists whenever any witness does
    CompositionReport rep = composition_test(fixtures::f2(), fixtures::d2(), 6, 10, 5);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures.front().variant == "counter-arena");
    Arena g = parse_arena(rep.failures.front().arena_text);
    for (size_t v = 0; v < g.size(); ++v) CHECK(!g.eve_owned[v]);
}

TEST_CASE("generic strategy_to_transducer") {
    // two-vertex game, both Eve's; input tokens name the target vertex
    ParityGame g;
    g.vnames = {"v0", "v1"};
    g.eve_owned = {true, false};
    g.priority = {2, 1};
    g.succ = {{0, 1}, {0, 1}};
    g.root = 0;
    Solution s = solve_parity(g);
    REQUIRE(s.eve_wins(0));
    Transducer t = strategy_to_transducer(
        g, s.eve_strategy, [](uint32_t, uint32_t to) { return Token::make_state(to); },
        [](uint32_t, int64_t choice) {
            return choice >= 0 ? Token::make_state((StateId)choice) : Token::epsilon();
        });
    CHECK(t.memory_count() <= g.size());
    CHECK(t.output[t.initial].kind == Token::Kind::State);
    CHECK(t.output[t.initial].state == 0); // Eve stays on the even vertex

    // ambiguous projection: a reachable opponent vertex with two
    // successors mapped to one token
    ParityGame h;
    h.vnames = {"u0", "u1", "u2"};
    h.eve_owned = {false, true, true};
    h.priority = {0, 2, 2};
    h.succ = {{1, 2}, {1}, {2}};
    h.root = 0;
    Solution hs = solve_parity(h);
    CHECK_THROWS_AS(strategy_to_transducer(
                        h, hs.eve_strategy, [](uint32_t, uint32_t) { return Token::epsilon(); },
                        [](uint32_t, int64_t) { return Token::epsilon(); }),
                    Error);
}
