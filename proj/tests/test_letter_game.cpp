#include <doctest.h>

#include "gfgaut/fixtures.hpp"
#include "gfgaut/letter_game.hpp"
#include "gfgaut/oracle.hpp"

#include <random>
#include <set>

using namespace gfgaut;

namespace {

/// Reference solver for two-stream disjunction games: enumerates Eve's
/// positional strategies (they suffice for the Rabin player) and checks
/// every reachable strongly connected vertex set of the restriction.
bool brute_force_disjunction_eve_wins(const TwoStreamGame& g) {
    const size_t n = g.succ.size();
    std::vector<Vertex> eve_vertices;
    for (Vertex v = 0; v < n; ++v)
        if (g.eve_owned[v]) eve_vertices.push_back(v);

    std::vector<size_t> pick(eve_vertices.size(), 0);
    while (true) {
        std::vector<std::vector<Vertex>> rs(n);
        for (Vertex v = 0; v < n; ++v) rs[v] = g.succ[v];
        for (size_t i = 0; i < eve_vertices.size(); ++i)
            rs[eve_vertices[i]] = {g.succ[eve_vertices[i]][pick[i]]};

        // reachable set from the root under the restriction
        std::vector<bool> reach(n, false);
        std::vector<Vertex> queue{g.root};
        reach[g.root] = true;
        for (size_t i = 0; i < queue.size(); ++i)
            for (Vertex u : rs[queue[i]])
                if (!reach[u]) {
                    reach[u] = true;
                    queue.push_back(u);
                }

        // every closed strongly connected subset must satisfy one stream
        bool good = true;
        for (uint32_t mask = 1; mask < (1u << n) && good; ++mask) {
            std::vector<Vertex> set;
            bool in_reach = true;
            for (Vertex v = 0; v < n; ++v)
                if (mask & (1u << v)) {
                    set.push_back(v);
                    in_reach = in_reach && reach[v];
                }
            if (!in_reach) continue;
            // strongly connected with at least one edge, inside the set
            bool connected = true;
            bool has_edge = false;
            for (Vertex v : set) {
                std::set<Vertex> r;
                std::vector<Vertex> q{v};
                while (!q.empty()) {
                    Vertex w = q.back();
                    q.pop_back();
                    for (Vertex u : rs[w]) {
                        if (!(mask & (1u << u))) continue;
                        has_edge = true;
                        if (r.insert(u).second) q.push_back(u);
                    }
                }
                for (Vertex u : set) connected = connected && r.count(u);
            }
            if (!connected || !has_edge) continue;
            int m1 = -1, m2 = -1;
            for (Vertex v : set) {
                m1 = std::max(m1, g.prio1[v]);
                m2 = std::max(m2, g.prio2[v]);
            }
            bool s1 = m1 >= 0 && m1 % 2 == 0;
            bool s2 = m2 >= 0 && m2 % 2 == 0;
            if (!s1 && !s2) good = false;
        }
        if (good) return true;

        size_t i = 0;
        for (; i < eve_vertices.size(); ++i) {
            if (++pick[i] < g.succ[eve_vertices[i]].size()) break;
            pick[i] = 0;
        }
        if (i == eve_vertices.size()) return false;
    }
}

TwoStreamGame random_two_stream(std::mt19937_64& rng, uint32_t max_size) {
    uint32_t n = 2 + (uint32_t)(rng() % (max_size - 1));
    TwoStreamGame g;
    g.succ.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        g.eve_owned.push_back(rng() % 2 == 0);
        g.prio1.push_back((int)(rng() % 5) - 1); // -1..3
        g.prio2.push_back((int)(rng() % 5) - 1);
        uint32_t k = 1 + (uint32_t)(rng() % 2);
        std::set<Vertex> t;
        for (uint32_t i = 0; i < k; ++i) t.insert((Vertex)(rng() % n));
        g.succ[v].assign(t.begin(), t.end());
    }
    g.root = 0;
    return g;
}

} // namespace

TEST_CASE("IAR compilation matches the Rabin brute force on random games") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        TwoStreamGame g = random_two_stream(rng, 5);
        IarCompiled c = iar_disjunction_to_parity(g);
        bool iar_verdict = solve_parity(c.game).eve_wins(*c.game.root);
        bool brute = brute_force_disjunction_eve_wins(g);
        INFO("trial ", trial);
        CHECK(iar_verdict == brute);
    }
}

TEST_CASE("deterministic automaton with itself as reference: Eve wins her game") {
    Automaton d2 = fixtures::d2();
    LetterGame lg = build_eve_letter_game(d2, d2);
    LetterGameVerdict v = solve_letter_game(lg);
    CHECK(v.compliant);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->memory_count() == 1); // no real choice anywhere
}

TEST_CASE("f3: every resolution wins Eve's game") {
    LetterGame lg = build_eve_letter_game(fixtures::f3(), fixtures::d3());
    LetterGameVerdict v = solve_letter_game(lg);
    CHECK(v.compliant);
    REQUIRE(v.witness.has_value());
}

TEST_CASE("f2 with reference d2: Adam wins Eve's letter game") {
    LetterGame lg = build_eve_letter_game(fixtures::f2(), fixtures::d2());
    LetterGameVerdict v = solve_letter_game(lg);
    CHECK(!v.compliant);
    REQUIRE(v.counter.has_value());
    // counter strategy emits letters from every memory
    for (const Token& out : v.counter->output) CHECK(out.kind == Token::Kind::Letter);
}

TEST_CASE("nondeterministic automata are trivially compliant with Adam's game") {
    LetterGameVerdict v2 = solve_letter_game(build_adam_letter_game(fixtures::f2(), fixtures::d2()));
    CHECK(v2.compliant);
    LetterGameVerdict v3 = solve_letter_game(build_adam_letter_game(fixtures::f3(), fixtures::d3()));
    CHECK(v3.compliant);
    // deterministic automata are compliant on both sides
    LetterGameVerdict vd = solve_letter_game(build_adam_letter_game(fixtures::d2(), fixtures::d2()));
    CHECK(vd.compliant);
}

TEST_CASE("dualize(f2): universality is not compliant") {
    LetterGameVerdict v =
        solve_letter_game(build_adam_letter_game(fixtures::f4(), fixtures::d4()));
    CHECK(!v.compliant);
    REQUIRE(v.counter.has_value());
    for (const Token& out : v.counter->output) CHECK(out.kind == Token::Kind::Letter);
}

TEST_CASE("parity-encoded acceptance yields the same verdicts") {
    auto to_parity = [](Automaton a) {
        std::vector<int> prio(a.num_states());
        for (StateId q = 0; q < a.num_states(); ++q) prio[q] = a.acceptance.parity_priority(q);
        a.acceptance = Acceptance::parity(std::move(prio));
        return a;
    };
    Automaton f2p = to_parity(fixtures::f2());
    Automaton d2p = to_parity(fixtures::d2());
    LetterGameVerdict e = solve_letter_game(build_eve_letter_game(f2p, d2p));
    CHECK(!e.compliant);
    LetterGameVerdict a = solve_letter_game(build_adam_letter_game(f2p, d2p));
    CHECK(a.compliant);
    LetterGameVerdict g = solve_letter_game(build_eve_letter_game(to_parity(fixtures::f3()),
                                                                  to_parity(fixtures::d3())));
    CHECK(g.compliant);
}

TEST_CASE("letter game rejects a nondeterministic reference") {
    CHECK_THROWS_AS(build_eve_letter_game(fixtures::f2(), fixtures::f2()), Error);
}

TEST_CASE("letter game rejects mismatched alphabets") {
    CHECK_THROWS_AS(build_eve_letter_game(fixtures::f2(), fixtures::d3()), Error);
}
