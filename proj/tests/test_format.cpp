#include <doctest.h>

#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"

using namespace gfgaut;

TEST_CASE("automaton round-trip: render then parse is the identity on canonical input") {
    for (const Automaton& a : {fixtures::f1(), fixtures::f2(), fixtures::d2(), fixtures::f3(),
                               fixtures::f4(), fixtures::gfg_abw()}) {
        std::string text = render_automaton(a);
        Automaton back = parse_automaton(text);
        CHECK(render_automaton(back) == text); // byte-compare after one canonicalization
        CHECK(back.states == a.states);
        CHECK(back.initial == a.initial);
        CHECK(back.acceptance.kind == a.acceptance.kind);
    }
}

TEST_CASE("parser reports missing delta lines") {
    std::string text = "automaton t\n"
                       "alphabet: a b\n"
                       "states: q0 q1\n"
                       "initial: q0\n"
                       "acceptance: buchi { q0 }\n"
                       "delta q0 a = q0 | q1\n"
                       "delta q0 b = q0\n"
                       "delta q1 a = q1\n";
    CHECK_THROWS_WITH_AS(parse_automaton(text),
                         doctest::Contains("missing delta line for q1 b"), ParseError);
}

TEST_CASE("parser reports unknown states with position") {
    std::string text = "automaton t\n"
                       "alphabet: a\n"
                       "states: q0\n"
                       "initial: q0\n"
                       "acceptance: buchi { q0 }\n"
                       "delta q0 a = nope\n";
    try {
        parse_automaton(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
        CHECK(std::string(e.what()).find("unknown state") != std::string::npos);
    }
}

TEST_CASE("operator precedence: & binds tighter than |") {
    std::string text = "automaton t\n"
                       "alphabet: a\n"
                       "states: p q r\n"
                       "initial: p\n"
                       "acceptance: buchi { p }\n"
                       "delta p a = p | q & r\n"
                       "delta q a = (p | q) & r\n"
                       "delta r a = r\n";
    Automaton a = parse_automaton(text);
    CHECK(a.cond(0, 0) == Cond::disj({Cond::leaf(0), Cond::conj({Cond::leaf(1), Cond::leaf(2)})}));
    CHECK(a.cond(1, 0) == Cond::conj({Cond::disj({Cond::leaf(0), Cond::leaf(1)}), Cond::leaf(2)}));
}

TEST_CASE("labels acceptance round-trips") {
    std::string text = "automaton mon\n"
                       "alphabet: x y\n"
                       "states: b0 b1\n"
                       "initial: b0\n"
                       "acceptance: labels { b0:a b1:b }\n"
                       "delta b0 x = b0 & b1\n"
                       "delta b0 y = b1\n"
                       "delta b1 x = b0 | b1\n"
                       "delta b1 y = b0\n";
    Automaton a = parse_automaton(text);
    CHECK(a.acceptance.kind == AccKind::Labels);
    CHECK(a.acceptance.labels == std::vector<std::string>{"a", "b"});
    CHECK(render_automaton(parse_automaton(render_automaton(a))) == render_automaton(a));
}

TEST_CASE("arena format round-trip") {
    std::string text = "vertex v0 owner=A label=a\n"
                       "vertex v1 owner=E label=b\n"
                       "edge v0 -> v1\n"
                       "edge v1 -> v0\n"
                       "edge v1 -> v1\n"
                       "root v0\n";
    Arena r = parse_arena(text);
    CHECK(r.size() == 2);
    CHECK(render_arena(r) == text);
    CHECK(r.root == Vertex{0});
    CHECK(!r.eve_owned[0]);
    CHECK(r.eve_owned[1]);
}

TEST_CASE("parity game format carries priorities") {
    std::string text = "vertex v0 owner=E priority=2\n"
                       "vertex v1 owner=A priority=1\n"
                       "edge v0 -> v1\n"
                       "edge v1 -> v0\n"
                       "root v0\n";
    ParityGame g = parse_parity_game(text);
    CHECK(g.priority == std::vector<int>{2, 1});
    CHECK(render_parity_game(g) == text);
}

TEST_CASE("lasso word syntax") {
    std::vector<std::string> ab{"a", "b"};
    ParsedWord w = parse_word("ab(ba)^w", ab);
    CHECK(w.is_lasso());
    CHECK(w.prefix == std::vector<LetterId>{0, 1});
    CHECK(w.period == std::vector<LetterId>{1, 0});
    CHECK(parse_word("(a)^w", ab).period == std::vector<LetterId>{0});
    CHECK(!parse_word("abba", ab).is_lasso());
    CHECK(parse_word("", ab).prefix.empty());
    CHECK_THROWS_AS(parse_word("ab(c)^w", ab), ParseError);
    CHECK_THROWS_AS(parse_word("ab()^w", ab), ParseError);
    CHECK_THROWS_AS(parse_word("ab(a)^", ab), ParseError);

    LassoWord lw = LassoWord::make({0, 1}, {1, 0});
    CHECK(render_lasso(lw, ab) == "ab(ba)^w");
}

TEST_CASE("lasso canonicalization") {
    // period made primitive
    LassoWord w = LassoWord::make({}, {0, 1, 0, 1});
    CHECK(w.period == std::vector<LetterId>{0, 1});
    // prefix rolled back: (u.v, v) equals (u, v)
    LassoWord a = LassoWord::make({1, 0, 1}, {0, 1});
    LassoWord b = LassoWord::make({1}, {0, 1});
    CHECK(a == b);
    // rotation absorbed into the prefix roll
    CHECK(LassoWord::make({0}, {1, 0}) == LassoWord::make({}, {0, 1}));
    CHECK_THROWS_AS(LassoWord::make({0}, {}), Error);
}

TEST_CASE("lasso enumeration is deduplicated") {
    auto all = enumerate_lassos(2, 2, 2);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
    // a^w, b^w, (ab)^w, (ba)^w, plus prefixed variants
    CHECK(all.size() > 8);
}
