/* gfgaut_cli.cpp -- command-line front end over the C API */

#include "gfgaut.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code(gfg_status s) {
    switch (s) {
    case GFG_OK: return 0;
    case GFG_ERR_UNVERIFIED: return 3;
    default: return 2;
    }
}

int report_error(gfg_status s) {
    std::cerr << "error: " << gfg_last_error() << "\n";
    return exit_code(s);
}

struct AutomatonHandle {
    gfg_automaton* p = nullptr;
    ~AutomatonHandle() { gfg_automaton_free(p); }
};

struct StringHandle {
    char* p = nullptr;
    ~StringHandle() { gfg_string_free(p); }
};

int load_automaton(const std::string& path, AutomatonHandle& h) {
    std::string text = read_file(path);
    gfg_status s = gfg_automaton_parse(text.c_str(), &h.p);
    return s == GFG_OK ? 0 : report_error(s);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        out << text;
    }
}

int write_automaton(gfg_automaton* a, const std::string& output_path) {
    StringHandle text;
    gfg_status s = gfg_automaton_render(a, &text.p);
    if (s != GFG_OK) return report_error(s);
    emit(text.p, output_path);
    return 0;
}

void print_verdict_human(const json& v, const std::string& label) {
    std::cout << label << ": " << v.value("verdict", std::string("?"));
    if (v.contains("witness")) std::cout << "  witness: " << v["witness"].get<std::string>();
    if (v.contains("lasso_bound"))
        std::cout << "  (lassos up to " << v["lasso_bound"].get<int>() << " checked)";
    std::cout << "  [" << v.value("detail", std::string()) << "]\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"good-for-games automata toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output, one JSON object per line");

    std::string aut_path, ref_path, out_path, arena_path, game_path, left_path, right_path,
        outer_path, inner_path, word, state, form, dir;
    bool skip_ref = false, force = false;
    uint32_t budget = 4, trials = 200, size = 8;
    uint64_t seed = 1;

    auto* c_check = app.add_subcommand("check-gfg", "decide GFGness via the letter games");
    c_check->add_option("--automaton", aut_path)->required();
    c_check->add_option("--reference", ref_path)->required();
    c_check->add_flag("--skip-reference-check", skip_ref);
    c_check->add_option("--budget", budget, "lasso bound for reference validation");

    auto* c_det = app.add_subcommand("determinize", "determinize a GFG automaton");
    c_det->add_option("--automaton", aut_path)->required();
    c_det->add_option("--reference", ref_path)->required();
    c_det->add_option("--output", out_path);

    auto* c_bp = app.add_subcommand("breakpoint", "alternation removal for Buchi automata");
    c_bp->add_option("--automaton", aut_path)->required();
    c_bp->add_option("--output", out_path);

    auto* c_acw = app.add_subcommand("acw-to-dcw", "determinize a GFG co-Buchi automaton");
    c_acw->add_option("--automaton", aut_path)->required();
    c_acw->add_option("--reference", ref_path)->required();
    c_acw->add_option("--output", out_path);

    auto* c_dual = app.add_subcommand("dualize", "swap the players and complement");
    c_dual->add_option("--automaton", aut_path)->required();
    c_dual->add_option("--output", out_path);

    auto* c_norm = app.add_subcommand("normalize", "rewrite transition conditions");
    c_norm->add_option("--automaton", aut_path)->required();
    c_norm->add_option("--form", form, "dnf or cnf")->required();
    c_norm->add_option("--output", out_path);

    auto* c_comp = app.add_subcommand("compose", "compose a labeled automaton with a monitor");
    c_comp->add_option("--outer", outer_path)->required();
    c_comp->add_option("--inner", inner_path)->required();
    c_comp->add_option("--output", out_path);

    auto* c_prod = app.add_subcommand("product", "synchronized product of arena and automaton");
    c_prod->add_option("--arena", arena_path)->required();
    c_prod->add_option("--automaton", aut_path)->required();
    c_prod->add_option("--output", out_path);

    auto* c_mem = app.add_subcommand("member", "membership of a word");
    c_mem->add_option("--automaton", aut_path)->required();
    c_mem->add_option("--word", word)->required();

    auto* c_solve = app.add_subcommand("solve", "solve a parity game");
    c_solve->add_option("--game", game_path)->required();

    auto* c_res = app.add_subcommand("residual", "re-root the automaton at a state");
    c_res->add_option("--automaton", aut_path)->required();
    c_res->add_option("--state", state)->required();
    c_res->add_option("--output", out_path);

    auto* c_eq = app.add_subcommand("equiv", "two-tier language equivalence");
    c_eq->add_option("--left", left_path)->required();
    c_eq->add_option("--right", right_path)->required();
    c_eq->add_option("--budget", budget);

    auto* c_ct = app.add_subcommand("composition-test", "randomized game composition trials");
    c_ct->add_option("--automaton", aut_path)->required();
    c_ct->add_option("--reference", ref_path)->required();
    c_ct->add_option("--trials", trials);
    c_ct->add_option("--seed", seed);
    c_ct->add_option("--size", size, "maximum arena size");
    c_ct->add_flag("--force", force, "proceed with an unverified reference");

    auto* c_rc = app.add_subcommand("residual-check", "Myhill-Nerode size bound for GFG automata");
    c_rc->add_option("--automaton", aut_path)->required();
    c_rc->add_option("--reference", ref_path)->required();

    auto* c_fx = app.add_subcommand("fixtures", "export the built-in fixture automata");
    c_fx->add_option("--dir", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_check->parsed()) {
            AutomatonHandle a, r;
            if (int rc = load_automaton(aut_path, a)) return rc;
            if (int rc = load_automaton(ref_path, r)) return rc;
            StringHandle rep;
            int is_gfg = 0;
            gfg_status s =
                gfg_check(a.p, r.p, skip_ref ? 1 : 0, budget, &rep.p, &is_gfg);
            if (s != GFG_OK) return report_error(s);
            json j = json::parse(rep.p);
            if (json_out) {
                std::cout << rep.p << "\n";
            } else {
                if (j["reference"].is_object()) print_verdict_human(j["reference"], "reference");
                else std::cout << "reference: skipped\n";
                std::cout << "nondeterminism compliant: "
                          << (j["nondeterminism_compliant"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "universality compliant: "
                          << (j["universality_compliant"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "GFG: " << (j["gfg"].get<bool>() ? "yes" : "no") << "\n";
                for (const char* key : {"eve_witness", "adam_witness", "adam_counter",
                                        "eve_counter"}) {
                    if (j.contains(key))
                        std::cout << "-- " << key << " (" << j[key]["memories"].get<size_t>()
                                  << " memories)\n"
                                  << j[key]["dump"].get<std::string>();
                }
            }
            return is_gfg ? 0 : 1;
        }
        if (c_det->parsed() || c_acw->parsed()) {
            AutomatonHandle a, r, out;
            if (int rc = load_automaton(aut_path, a)) return rc;
            if (int rc = load_automaton(ref_path, r)) return rc;
            gfg_status s = c_det->parsed() ? gfg_determinize(a.p, r.p, &out.p)
                                           : gfg_acw_to_dcw_pipeline(a.p, r.p, &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_bp->parsed()) {
            AutomatonHandle a, out;
            if (int rc = load_automaton(aut_path, a)) return rc;
            gfg_status s = gfg_breakpoint(a.p, &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_dual->parsed()) {
            AutomatonHandle a, out;
            if (int rc = load_automaton(aut_path, a)) return rc;
            gfg_status s = gfg_automaton_dualize(a.p, &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_norm->parsed()) {
            if (form != "dnf" && form != "cnf") {
                std::cerr << "error: --form must be dnf or cnf\n";
                return 2;
            }
            AutomatonHandle a, out;
            if (int rc = load_automaton(aut_path, a)) return rc;
            gfg_status s = gfg_automaton_normalize(a.p, form == "cnf" ? 1 : 0, &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_res->parsed()) {
            AutomatonHandle a, out;
            if (int rc = load_automaton(aut_path, a)) return rc;
            gfg_status s = gfg_automaton_residual(a.p, state.c_str(), &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_comp->parsed()) {
            AutomatonHandle b, a, out;
            if (int rc = load_automaton(outer_path, b)) return rc;
            if (int rc = load_automaton(inner_path, a)) return rc;
            gfg_status s = gfg_compose(b.p, a.p, &out.p);
            if (s != GFG_OK) return report_error(s);
            return write_automaton(out.p, out_path);
        }
        if (c_prod->parsed()) {
            AutomatonHandle a;
            gfg_arena* arena = nullptr;
            gfg_game* game = nullptr;
            std::string text = read_file(arena_path);
            gfg_status s = gfg_arena_parse(text.c_str(), &arena);
            if (s != GFG_OK) return report_error(s);
            if (int rc = load_automaton(aut_path, a)) {
                gfg_arena_free(arena);
                return rc;
            }
            s = gfg_product(arena, a.p, &game);
            gfg_arena_free(arena);
            if (s != GFG_OK) return report_error(s);
            StringHandle gt;
            s = gfg_game_render(game, &gt.p);
            gfg_game_free(game);
            if (s != GFG_OK) return report_error(s);
            emit(gt.p, out_path);
            return 0;
        }
        if (c_mem->parsed()) {
            AutomatonHandle a;
            if (int rc = load_automaton(aut_path, a)) return rc;
            int accepted = 0;
            gfg_status s = gfg_member(a.p, word.c_str(), &accepted);
            if (s != GFG_OK) return report_error(s);
            if (json_out) {
                json j;
                j["word"] = word;
                j["accepted"] = accepted != 0;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (accepted ? "accepted" : "rejected") << "\n";
            }
            return accepted ? 0 : 1;
        }
        if (c_solve->parsed()) {
            gfg_game* game = nullptr;
            std::string text = read_file(game_path);
            gfg_status s = gfg_game_parse(text.c_str(), &game);
            if (s != GFG_OK) return report_error(s);
            StringHandle rep;
            int eve_wins = -1;
            s = gfg_solve(game, &rep.p, &eve_wins);
            gfg_game_free(game);
            if (s != GFG_OK) return report_error(s);
            json j = json::parse(rep.p);
            if (json_out) {
                std::cout << rep.p << "\n";
            } else {
                if (j.contains("root_winner"))
                    std::cout << "root winner: " << j["root_winner"].get<std::string>() << "\n";
                std::cout << "eve region:";
                for (const auto& v : j["eve_region"]) std::cout << " " << v.get<std::string>();
                std::cout << "\nadam region:";
                for (const auto& v : j["adam_region"]) std::cout << " " << v.get<std::string>();
                std::cout << "\n";
            }
            return eve_wins == 0 ? 1 : 0;
        }
        if (c_eq->parsed()) {
            AutomatonHandle l, r;
            if (int rc = load_automaton(left_path, l)) return rc;
            if (int rc = load_automaton(right_path, r)) return rc;
            StringHandle rep;
            int verdict = 2;
            gfg_status s = gfg_equivalence(l.p, r.p, budget, &rep.p, &verdict);
            if (s != GFG_OK) return report_error(s);
            if (json_out) std::cout << rep.p << "\n";
            else print_verdict_human(json::parse(rep.p), "equivalence");
            return verdict == 0 ? 0 : verdict == 1 ? 1 : 3;
        }
        if (c_ct->parsed()) {
            AutomatonHandle a, r;
            if (int rc = load_automaton(aut_path, a)) return rc;
            if (int rc = load_automaton(ref_path, r)) return rc;
            StringHandle rep;
            int discrepancies = 0;
            gfg_status s = gfg_composition_test(a.p, r.p, size, trials, seed, force ? 1 : 0,
                                                &rep.p, &discrepancies);
            if (s != GFG_OK) return report_error(s);
            if (json_out) {
                std::cout << rep.p << "\n";
            } else {
                json j = json::parse(rep.p);
                std::cout << "games compared: " << j["games_compared"].get<int>() << "\n";
                std::cout << "discrepancies: " << j["discrepancies"].get<int>() << "\n";
                std::cout << "letter-game verdict: " << (j["gfg"].get<bool>() ? "GFG" : "not GFG")
                          << "\n";
                if (j["counter_arena_included"].get<bool>())
                    std::cout << "counter-strategy arena discriminates: "
                              << (j["counter_arena_discriminates"].get<bool>() ? "yes" : "no")
                              << "\n";
                for (const auto& f : j["failures"]) {
                    std::cout << "discrepancy in trial " << f["trial"].get<int>() << " ("
                              << f["variant"].get<std::string>() << "):\n"
                              << f["arena"].get<std::string>();
                }
            }
            return discrepancies == 0 ? 0 : 1;
        }
        if (c_rc->parsed()) {
            AutomatonHandle a, r;
            if (int rc = load_automaton(aut_path, a)) return rc;
            if (int rc = load_automaton(ref_path, r)) return rc;
            StringHandle rep;
            int pass = 0;
            gfg_status s = gfg_residual_check(a.p, r.p, &rep.p, &pass);
            if (s != GFG_OK) return report_error(s);
            if (json_out) {
                std::cout << rep.p << "\n";
            } else {
                json j = json::parse(rep.p);
                std::cout << "automaton states: " << j["automaton_states"].get<int>() << "\n";
                std::cout << "residual classes: " << j["residual_classes"].get<int>() << "\n";
                std::cout << "minimal deterministic size: "
                          << j["minimal_deterministic_size"].get<int>() << "\n";
                std::cout << (pass ? "pass" : "fail") << "\n";
            }
            return pass ? 0 : 1;
        }
        if (c_fx->parsed()) {
            for (const char* name : {"f1", "f2", "d2", "f3", "d3", "f4", "d4"}) {
                AutomatonHandle a;
                gfg_status s = gfg_fixture(name, &a.p);
                if (s != GFG_OK) return report_error(s);
                StringHandle text;
                s = gfg_automaton_render(a.p, &text.p);
                if (s != GFG_OK) return report_error(s);
                std::ofstream out(dir + "/" + name + ".aut", std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write to " << dir << "\n";
                    return 2;
                }
                out << text.p;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
