#include <doctest.h>

#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"
#include "gfgaut/gfg.hpp"
#include "gfgaut/oracle.hpp"
#include "gfgaut/products.hpp"

#include <random>
#include <set>

using namespace gfgaut;

namespace {

Arena lasso_path(const LassoWord& w, const std::vector<std::string>& alphabet) {
    Arena r;
    for (size_t i = 0; i < w.total_length(); ++i)
        r.add_vertex("p" + std::to_string(i), alphabet[w.at(i)], true);
    for (size_t i = 0; i < w.total_length(); ++i)
        r.add_edge((Vertex)i, (Vertex)(i + 1 == w.total_length() ? w.loop_start() : i + 1));
    r.root = 0;
    return r;
}

/// Right-hand side of the composition claim: the model-checking game of
/// the outer automaton with winning condition L(det inner), evaluated
/// through the run structure and a deterministic monitor.
bool outer_wins_with_condition(const Automaton& b, const LassoWord& w, const Automaton& det) {
    ProductGraph pg = product_graph(lasso_path(w, b.alphabet), b);
    std::vector<LetterId> beta(b.num_states());
    for (StateId q = 0; q < b.num_states(); ++q) {
        auto li = det.letter_index(b.acceptance.labels[q]);
        REQUIRE(li.has_value());
        beta[q] = *li;
    }
    ParityGame g = monitor_game(pg, beta, det);
    return solve_parity(g).eve_wins(*g.root);
}

} // namespace

TEST_CASE("compose with a one-state accept-everything monitor") {
    std::mt19937_64 rng(71);
    Automaton all = fixtures::f1(); // deterministic, L = Sigma^w
    for (int trial = 0; trial < 6; ++trial) {
        Automaton b = fixtures::random_labeled(rng, 3, {"x", "y"}, all.alphabet);
        Automaton c = compose(b, all);
        CHECK(c.num_states() <= b.num_states() * all.num_states());
        for (const LassoWord& w : enumerate_lassos(2, 3, 3)) CHECK(accepts(c, w));
    }
}

TEST_CASE("composition with a GFG inner automaton preserves the language") {
    std::mt19937_64 rng(72);
    Automaton inner = fixtures::gfg_abw(); // GFG, L = infinitely many a's
    Automaton det = fixtures::gfg_abw_ref();
    for (int trial = 0; trial < 8; ++trial) {
        Automaton b = fixtures::random_labeled(rng, 3, {"x", "y"}, inner.alphabet);
        Automaton c = compose(b, inner);
        CHECK(c.num_states() <= b.num_states() * inner.num_states());
        CHECK(c.acceptance.kind == inner.acceptance.kind);
        for (const LassoWord& w : enumerate_lassos(2, 3, 3)) {
            INFO("trial ", trial, " word ", render_lasso(w, b.alphabet));
            CHECK(accepts(c, w) == outer_wins_with_condition(b, w, det));
        }
    }
}

TEST_CASE("composition with the deterministic reference is always sound") {
    std::mt19937_64 rng(73);
    Automaton det = fixtures::d2();
    for (int trial = 0; trial < 8; ++trial) {
        Automaton b = fixtures::random_labeled(rng, 3, {"x", "y"}, det.alphabet);
        Automaton c = compose(b, det);
        for (const LassoWord& w : enumerate_lassos(2, 3, 3))
            CHECK(accepts(c, w) == outer_wins_with_condition(b, w, det));
    }
}

TEST_CASE("compose rejects mismatched labels and missing labelings") {
    std::mt19937_64 rng(1);
    Automaton b = fixtures::random_labeled(rng, 2, {"x"}, {"z"});
    CHECK_THROWS_AS(compose(b, fixtures::f1()), Error);
    CHECK_THROWS_AS(compose(fixtures::f1(), fixtures::f1()), Error);
}

TEST_CASE("residual of f2 at qa recognizes a^w") {
    Automaton r = residual(fixtures::f2(), *fixtures::f2().state_index("qa"));
    for (const LassoWord& w : enumerate_lassos(2, 4, 4)) {
        bool only_a = true;
        for (size_t i = 0; i < w.total_length(); ++i) only_a = only_a && w.at(i) == 0;
        CHECK(accepts(r, w) == only_a);
    }
}

TEST_CASE("product vertex count bound over the split closure") {
    Automaton a = fixtures::gfg_abw();
    // distinct condition values reachable under binary splitting
    std::set<Cond> closure;
    std::vector<Cond> work;
    auto push = [&](const Cond& c) {
        if (closure.insert(c).second) work.push_back(c);
    };
    for (StateId q = 0; q < a.num_states(); ++q) {
        push(Cond::leaf(q));
        for (LetterId x = 0; x < a.num_letters(); ++x) push(a.cond(q, x));
    }
    while (!work.empty()) {
        Cond c = work.back();
        work.pop_back();
        if (c.is_leaf()) continue;
        auto [l, r] = c.split_binary();
        push(l);
        push(r);
    }
    std::mt19937_64 rng(74);
    for (int trial = 0; trial < 10; ++trial) {
        Arena g = random_arena(rng, 6, a.alphabet, ArenaVariant::TwoPlayer);
        ParityGame p = synchronized_product(g, a);
        CHECK(p.size() <= g.size() * closure.size());
    }
}
