#include <doctest.h>

#include "gfgaut.h"

#include <string>

namespace {

struct Aut {
    gfg_automaton* p = nullptr;
    ~Aut() { gfg_automaton_free(p); }
};

struct Str {
    char* p = nullptr;
    ~Str() { gfg_string_free(p); }
    std::string s() const { return p ? p : ""; }
};

Aut fixture(const char* name) {
    Aut a;
    REQUIRE(gfg_fixture(name, &a.p) == GFG_OK);
    return a;
}

} // namespace

TEST_CASE("c api: parse, render, validate") {
    Aut f2 = fixture("f2");
    Str text;
    REQUIRE(gfg_automaton_render(f2.p, &text.p) == GFG_OK);
    Aut back;
    REQUIRE(gfg_automaton_parse(text.p, &back.p) == GFG_OK);
    Str again;
    REQUIRE(gfg_automaton_render(back.p, &again.p) == GFG_OK);
    CHECK(text.s() == again.s());

    int ok = 0;
    Str report;
    REQUIRE(gfg_automaton_validate(f2.p, &report.p, &ok) == GFG_OK);
    CHECK(ok == 1);
    CHECK(report.s().empty());

    Aut bad;
    CHECK(gfg_automaton_parse("automaton x\nalphabet: a\n", &bad.p) == GFG_ERR_PARSE);
    CHECK(std::string(gfg_last_error()).find("line") != std::string::npos);
}

TEST_CASE("c api: membership and transformations") {
    Aut f2 = fixture("f2");
    int acc = -1;
    REQUIRE(gfg_member(f2.p, "(a)^w", &acc) == GFG_OK);
    CHECK(acc == 1);
    REQUIRE(gfg_member(f2.p, "(ab)^w", &acc) == GFG_OK);
    CHECK(acc == 0);
    REQUIRE(gfg_member(f2.p, "ab(b)^w", &acc) == GFG_OK);
    CHECK(acc == 1);
    CHECK(gfg_member(f2.p, "ab", &acc) == GFG_ERR_PRECONDITION);

    Aut dual;
    REQUIRE(gfg_automaton_dualize(f2.p, &dual.p) == GFG_OK);
    REQUIRE(gfg_member(dual.p, "(ab)^w", &acc) == GFG_OK);
    CHECK(acc == 1);

    Aut dnf;
    REQUIRE(gfg_automaton_normalize(f2.p, 0, &dnf.p) == GFG_OK);
    Aut res;
    REQUIRE(gfg_automaton_residual(f2.p, "qa", &res.p) == GFG_OK);
    REQUIRE(gfg_member(res.p, "(a)^w", &acc) == GFG_OK);
    CHECK(acc == 1);
    REQUIRE(gfg_member(res.p, "(ba)^w", &acc) == GFG_OK);
    CHECK(acc == 0);
    CHECK(gfg_automaton_residual(f2.p, "nope", &res.p) == GFG_ERR_INVALID);
}

TEST_CASE("c api: check-gfg verdicts and exit semantics") {
    Aut f2 = fixture("f2"), d2 = fixture("d2");
    Str rep;
    int is_gfg = -1;
    REQUIRE(gfg_check(f2.p, d2.p, 0, 4, &rep.p, &is_gfg) == GFG_OK);
    CHECK(is_gfg == 0);
    CHECK(rep.s().find("\"nondeterminism_compliant\":false") != std::string::npos);
    CHECK(rep.s().find("adam_counter") != std::string::npos);

    Aut f3 = fixture("f3"), d3 = fixture("d3");
    Str rep3;
    REQUIRE(gfg_check(f3.p, d3.p, 0, 4, &rep3.p, &is_gfg) == GFG_OK);
    CHECK(is_gfg == 1);

    // wrong reference: falsified -> invalid
    Aut f1 = fixture("f1");
    Str rep4;
    CHECK(gfg_check(f2.p, f1.p, 0, 4, &rep4.p, &is_gfg) == GFG_ERR_INVALID);
}

TEST_CASE("c api: determinize and equivalence") {
    Aut f3 = fixture("f3"), d3 = fixture("d3");
    Aut det;
    REQUIRE(gfg_determinize(f3.p, d3.p, &det.p) == GFG_OK);
    Str rep;
    int verdict = -1;
    REQUIRE(gfg_equivalence(det.p, f3.p, 4, &rep.p, &verdict) == GFG_OK);
    CHECK(verdict == 0);

    Aut f1 = fixture("f1"), f2 = fixture("f2");
    Str rep2;
    REQUIRE(gfg_equivalence(f1.p, f2.p, 4, &rep2.p, &verdict) == GFG_OK);
    CHECK(verdict == 1);
    CHECK(rep2.s().find("witness") != std::string::npos);
}

TEST_CASE("c api: products and solving") {
    const char* arena_text = "vertex u owner=A label=a\n"
                             "vertex v owner=A label=b\n"
                             "edge u -> v\n"
                             "edge v -> u\n"
                             "root u\n";
    gfg_arena* arena = nullptr;
    REQUIRE(gfg_arena_parse(arena_text, &arena) == GFG_OK);
    Aut f2 = fixture("f2");
    gfg_game* game = nullptr;
    REQUIRE(gfg_product(arena, f2.p, &game) == GFG_OK);
    Str rep;
    int eve_wins = -1;
    REQUIRE(gfg_solve(game, &rep.p, &eve_wins) == GFG_OK);
    CHECK(eve_wins == 0); // (ab)^w is not in L(f2)
    CHECK(rep.s().find("root_winner") != std::string::npos);
    gfg_game_free(game);
    gfg_arena_free(arena);
}

TEST_CASE("c api: breakpoint, pipeline, composition, residual check") {
    Aut f2 = fixture("f2");
    Aut bp;
    REQUIRE(gfg_breakpoint(f2.p, &bp.p) == GFG_OK);
    int acc = -1;
    REQUIRE(gfg_member(bp.p, "(ab)^w", &acc) == GFG_OK);
    CHECK(acc == 0);

    Aut d2 = fixture("d2");
    Str rep;
    int discrepancies = -1;
    REQUIRE(gfg_composition_test(f2.p, d2.p, 6, 5, 1, 0, &rep.p, &discrepancies) == GFG_OK);
    CHECK(discrepancies >= 1);
    CHECK(rep.s().find("counter_arena_discriminates\":true") != std::string::npos);
}
