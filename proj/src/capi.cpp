/* capi.cpp -- the extern-C surface over the core library */

#include "gfgaut.h"

#include "gfgaut/constructions.hpp"
#include "gfgaut/fixtures.hpp"
#include "gfgaut/format.hpp"
#include "gfgaut/gfg.hpp"
#include "gfgaut/oracle.hpp"
#include "gfgaut/products.hpp"

#include <json.hpp>

#include <cstring>

using json = nlohmann::ordered_json;
using namespace gfgaut;

struct gfg_automaton {
    Automaton a;
};
struct gfg_arena {
    Arena r;
};
struct gfg_game {
    ParityGame g;
};

namespace {

thread_local std::string t_last_error;

gfg_status fail(gfg_status code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = (char*)::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs the body, translating exceptions into status codes.
template <typename Fn>
gfg_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(GFG_ERR_PARSE, e.what());
    } catch (const NotGfg& e) {
        return fail(GFG_ERR_PRECONDITION, e.what());
    } catch (const Error& e) {
        return fail(GFG_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(GFG_ERR_INTERNAL, e.what());
    }
}

json transducer_json(const Transducer& t, const Automaton& a) {
    json j;
    j["name"] = t.name;
    j["memories"] = t.memory_count();
    j["dump"] = render_transducer(t, a.alphabet, normalize(a, NormalForm::Dnf).states);
    return j;
}

json verdict_json(const CheckVerdict& v, const Automaton& a) {
    json j;
    switch (v.kind) {
    case VerdictKind::Verified: j["verdict"] = "verified"; break;
    case VerdictKind::Falsified: j["verdict"] = "falsified"; break;
    case VerdictKind::NotFalsified: j["verdict"] = "not-falsified"; break;
    }
    j["detail"] = v.detail;
    if (v.witness) {
        j["witness"] = v.witness->is_lasso()
                           ? render_lasso(LassoWord::make(v.witness->prefix, v.witness->period),
                                          a.alphabet)
                           : render_finite_word(v.witness->prefix, a.alphabet);
    }
    if (v.kind == VerdictKind::NotFalsified) j["lasso_bound"] = v.lasso_bound;
    return j;
}

} // namespace

extern "C" {

const char* gfg_last_error(void) { return t_last_error.c_str(); }

void gfg_string_free(char* s) { ::free(s); }
void gfg_automaton_free(gfg_automaton* a) { delete a; }
void gfg_arena_free(gfg_arena* r) { delete r; }
void gfg_game_free(gfg_game* g) { delete g; }

gfg_status gfg_automaton_parse(const char* text, gfg_automaton** out) {
    return guarded([&] {
        if (!text || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_automaton{parse_automaton(text)};
        return GFG_OK;
    });
}

gfg_status gfg_automaton_render(const gfg_automaton* a, char** out) {
    return guarded([&] {
        if (!a || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = dup_string(render_automaton(a->a));
        return GFG_OK;
    });
}

gfg_status gfg_automaton_validate(const gfg_automaton* a, char** report, int* ok) {
    return guarded([&] {
        if (!a) return fail(GFG_ERR_INVALID, "null argument");
        auto violations = validate(a->a);
        if (ok) *ok = violations.empty() ? 1 : 0;
        if (report) {
            std::string text;
            for (const auto& v : violations) text += v.detail + "\n";
            *report = dup_string(text);
        }
        return GFG_OK;
    });
}

gfg_status gfg_arena_parse(const char* text, gfg_arena** out) {
    return guarded([&] {
        if (!text || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_arena{parse_arena(text)};
        return GFG_OK;
    });
}

gfg_status gfg_arena_render(const gfg_arena* r, char** out) {
    return guarded([&] {
        if (!r || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = dup_string(render_arena(r->r));
        return GFG_OK;
    });
}

gfg_status gfg_game_parse(const char* text, gfg_game** out) {
    return guarded([&] {
        if (!text || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_game{parse_parity_game(text)};
        return GFG_OK;
    });
}

gfg_status gfg_game_render(const gfg_game* g, char** out) {
    return guarded([&] {
        if (!g || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = dup_string(render_parity_game(g->g));
        return GFG_OK;
    });
}

gfg_status gfg_fixture(const char* name, gfg_automaton** out) {
    return guarded([&] {
        if (!name || !out) return fail(GFG_ERR_INVALID, "null argument");
        std::string n = name;
        Automaton a;
        if (n == "f1") a = fixtures::f1();
        else if (n == "f2") a = fixtures::f2();
        else if (n == "d2") a = fixtures::d2();
        else if (n == "f3") a = fixtures::f3();
        else if (n == "d3") a = fixtures::d3();
        else if (n == "f4") a = fixtures::f4();
        else if (n == "d4") a = fixtures::d4();
        else return fail(GFG_ERR_INVALID, "unknown fixture '" + n + "'");
        *out = new gfg_automaton{std::move(a)};
        return GFG_OK;
    });
}

gfg_status gfg_automaton_dualize(const gfg_automaton* a, gfg_automaton** out) {
    return guarded([&] {
        if (!a || !out) return fail(GFG_ERR_INVALID, "null argument");
        require_valid(a->a);
        *out = new gfg_automaton{dualize(a->a)};
        return GFG_OK;
    });
}

gfg_status gfg_automaton_normalize(const gfg_automaton* a, int form, gfg_automaton** out) {
    return guarded([&] {
        if (!a || !out) return fail(GFG_ERR_INVALID, "null argument");
        require_valid(a->a);
        *out = new gfg_automaton{
            normalize(a->a, form == 0 ? NormalForm::Dnf : NormalForm::Cnf)};
        return GFG_OK;
    });
}

gfg_status gfg_automaton_residual(const gfg_automaton* a, const char* state,
                                  gfg_automaton** out) {
    return guarded([&] {
        if (!a || !state || !out) return fail(GFG_ERR_INVALID, "null argument");
        auto q = a->a.state_index(state);
        if (!q) return fail(GFG_ERR_INVALID, std::string("unknown state '") + state + "'");
        *out = new gfg_automaton{residual(a->a, *q)};
        return GFG_OK;
    });
}

gfg_status gfg_breakpoint(const gfg_automaton* a, gfg_automaton** out) {
    return guarded([&] {
        if (!a || !out) return fail(GFG_ERR_INVALID, "null argument");
        if (a->a.acceptance.kind != AccKind::Buchi && a->a.acceptance.kind != AccKind::Weak)
            return fail(GFG_ERR_PRECONDITION, "breakpoint needs a Buchi automaton");
        *out = new gfg_automaton{breakpoint(a->a)};
        return GFG_OK;
    });
}

gfg_status gfg_subset_construction(const gfg_automaton* a, gfg_automaton** out) {
    return guarded([&] {
        if (!a || !out) return fail(GFG_ERR_INVALID, "null argument");
        if (a->a.acceptance.kind != AccKind::FiniteWords)
            return fail(GFG_ERR_PRECONDITION, "subset construction needs finite-word acceptance");
        *out = new gfg_automaton{subset_construction(a->a)};
        return GFG_OK;
    });
}

gfg_status gfg_compose(const gfg_automaton* outer, const gfg_automaton* inner,
                       gfg_automaton** out) {
    return guarded([&] {
        if (!outer || !inner || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_automaton{compose(outer->a, inner->a)};
        return GFG_OK;
    });
}

gfg_status gfg_product(const gfg_arena* r, const gfg_automaton* a, gfg_game** out) {
    return guarded([&] {
        if (!r || !a || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_game{synchronized_product(r->r, a->a)};
        return GFG_OK;
    });
}

gfg_status gfg_solve(const gfg_game* g, char** report_json, int* eve_wins_root) {
    return guarded([&] {
        if (!g) return fail(GFG_ERR_INVALID, "null argument");
        Solution s = solve_parity(g->g);
        if (eve_wins_root)
            *eve_wins_root = g->g.root ? (s.eve_wins(*g->g.root) ? 1 : 0) : -1;
        if (report_json) {
            json j;
            json eve = json::array(), adam = json::array();
            for (Vertex v = 0; v < g->g.size(); ++v)
                (s.eve_region[v] ? eve : adam).push_back(g->g.vnames[v]);
            j["eve_region"] = eve;
            j["adam_region"] = adam;
            if (g->g.root) j["root_winner"] = s.eve_wins(*g->g.root) ? "eve" : "adam";
            json estrat = json::object(), astrat = json::object();
            for (Vertex v = 0; v < g->g.size(); ++v) {
                if (s.eve_strategy.choice[v] >= 0)
                    estrat[g->g.vnames[v]] = g->g.vnames[(size_t)s.eve_strategy.choice[v]];
                if (s.adam_strategy.choice[v] >= 0)
                    astrat[g->g.vnames[v]] = g->g.vnames[(size_t)s.adam_strategy.choice[v]];
            }
            j["eve_strategy"] = estrat;
            j["adam_strategy"] = astrat;
            *report_json = dup_string(j.dump());
        }
        return GFG_OK;
    });
}

gfg_status gfg_member(const gfg_automaton* a, const char* word, int* accepted) {
    return guarded([&] {
        if (!a || !word || !accepted) return fail(GFG_ERR_INVALID, "null argument");
        require_valid(a->a);
        ParsedWord w = parse_word(word, a->a.alphabet);
        if (a->a.acceptance.kind == AccKind::FiniteWords) {
            if (w.is_lasso())
                return fail(GFG_ERR_PRECONDITION,
                            "finite-word automata take finite words, not lassos");
            *accepted = accepts_finite(a->a, w.prefix) ? 1 : 0;
        } else {
            if (!w.is_lasso())
                return fail(GFG_ERR_PRECONDITION, "omega automata take lasso words u(v)^w");
            *accepted = accepts(a->a, w.lasso()) ? 1 : 0;
        }
        return GFG_OK;
    });
}

gfg_status gfg_check(const gfg_automaton* a, const gfg_automaton* ref, int skip_ref_check,
                     uint32_t budget, char** report_json, int* is_gfg_out) {
    return guarded([&] {
        if (!a || !ref) return fail(GFG_ERR_INVALID, "null argument");
        require_valid(a->a);
        require_valid(ref->a);
        json j;
        if (!skip_ref_check) {
            CheckVerdict rv = reference_check(a->a, ref->a, budget ? budget : 4);
            j["reference"] = verdict_json(rv, a->a);
            if (rv.kind == VerdictKind::Falsified)
                return fail(GFG_ERR_INVALID, "the reference does not recognize L(a)");
            if (rv.kind == VerdictKind::NotFalsified)
                return fail(GFG_ERR_UNVERIFIED,
                            "reference not verifiable within budget; rerun with "
                            "--skip-reference-check to force");
        } else {
            j["reference"] = "skipped";
        }
        GfgVerdict v = is_gfg(a->a, ref->a);
        j["nondeterminism_compliant"] = v.nondeterminism_compliant;
        j["universality_compliant"] = v.universality_compliant;
        j["gfg"] = v.gfg();
        if (v.eve_witness) j["eve_witness"] = transducer_json(*v.eve_witness, a->a);
        if (v.adam_witness) j["adam_witness"] = transducer_json(*v.adam_witness, a->a);
        if (v.adam_counter) j["adam_counter"] = transducer_json(*v.adam_counter, a->a);
        if (v.eve_counter) j["eve_counter"] = transducer_json(*v.eve_counter, a->a);
        if (is_gfg_out) *is_gfg_out = v.gfg() ? 1 : 0;
        if (report_json) *report_json = dup_string(j.dump());
        return GFG_OK;
    });
}

gfg_status gfg_determinize(const gfg_automaton* a, const gfg_automaton* ref,
                           gfg_automaton** out) {
    return guarded([&] {
        if (!a || !ref || !out) return fail(GFG_ERR_INVALID, "null argument");
        auto [m_e, m_a] = extract_hd_transducers(a->a, ref->a);
        *out = new gfg_automaton{determinize_gfg(a->a, m_e, m_a)};
        return GFG_OK;
    });
}

gfg_status gfg_acw_to_dcw_pipeline(const gfg_automaton* a, const gfg_automaton* ref,
                                   gfg_automaton** out) {
    return guarded([&] {
        if (!a || !ref || !out) return fail(GFG_ERR_INVALID, "null argument");
        *out = new gfg_automaton{gfg_acw_to_dcw(a->a, ref->a)};
        return GFG_OK;
    });
}

gfg_status gfg_equivalence(const gfg_automaton* a, const gfg_automaton* b, uint32_t budget,
                           char** report_json, int* verdict) {
    return guarded([&] {
        if (!a || !b) return fail(GFG_ERR_INVALID, "null argument");
        CheckVerdict v = equivalence(a->a, b->a, budget ? budget : 4);
        if (verdict)
            *verdict = v.kind == VerdictKind::Verified ? 0
                       : v.kind == VerdictKind::Falsified ? 1
                                                          : 2;
        if (report_json) *report_json = dup_string(verdict_json(v, a->a).dump());
        return GFG_OK;
    });
}

gfg_status gfg_composition_test(const gfg_automaton* a, const gfg_automaton* ref,
                                uint32_t arena_size, uint32_t rounds, uint64_t seed, int force,
                                char** report_json, int* discrepancies) {
    return guarded([&] {
        if (!a || !ref) return fail(GFG_ERR_INVALID, "null argument");
        CompositionReport rep =
            composition_test(a->a, ref->a, arena_size, rounds, seed, force != 0);
        if (discrepancies) *discrepancies = (int)rep.discrepancies;
        if (report_json) {
            json j;
            j["rounds"] = rep.rounds;
            j["games_compared"] = rep.games_compared;
            j["discrepancies"] = rep.discrepancies;
            j["gfg"] = rep.gfg.gfg();
            j["nondeterminism_compliant"] = rep.gfg.nondeterminism_compliant;
            j["universality_compliant"] = rep.gfg.universality_compliant;
            j["counter_arena_included"] = rep.counter_arena_included;
            j["counter_arena_discriminates"] = rep.counter_arena_discriminates;
            j["reference"] = verdict_json(rep.reference_verdict, a->a);
            json fails = json::array();
            for (const auto& f : rep.failures) {
                json fj;
                fj["trial"] = f.index;
                fj["variant"] = f.variant;
                fj["eve_wins_reference_product"] = f.eve_wins_ref;
                fj["eve_wins_automaton_product"] = f.eve_wins_aut;
                fj["arena"] = f.arena_text;
                fails.push_back(fj);
            }
            j["failures"] = fails;
            *report_json = dup_string(j.dump());
        }
        return GFG_OK;
    });
}

gfg_status gfg_residual_check(const gfg_automaton* a, const gfg_automaton* ref,
                              char** report_json, int* pass) {
    return guarded([&] {
        if (!a || !ref) return fail(GFG_ERR_INVALID, "null argument");
        ResidualReport rep = residual_check_with_reference(a->a, ref->a);
        if (pass) *pass = rep.pass ? 1 : 0;
        if (report_json) {
            json j;
            j["automaton_states"] = rep.automaton_states;
            j["residual_classes"] = rep.residual_classes;
            j["minimal_deterministic_size"] = rep.minimal_deterministic_size;
            j["pass"] = rep.pass;
            *report_json = dup_string(j.dump());
        }
        return GFG_OK;
    });
}

} // extern "C"
