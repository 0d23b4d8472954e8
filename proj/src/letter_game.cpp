/* letter_game.cpp -- configuration graph, IAR compilation, witness extraction */

#include "gfgaut/letter_game.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace gfgaut {

namespace {

struct RawGraph {
    // parallel vertex arrays
    std::vector<ConfigKind> kind;
    std::vector<StateId> state;
    std::vector<StateId> ref_state;
    std::vector<LetterId> letter;
    std::vector<uint32_t> clause_id;
    std::vector<bool> eve_owned;
    std::vector<int> prio1, prio2; // -1 = silent
    std::vector<std::vector<Vertex>> succ;
    Vertex root = 0;
    std::vector<Clause> clauses; // interned
};

RawGraph build_raw(const Automaton& dnf, const Automaton& ref,
                   const std::vector<LetterId>& ref_letter, bool adam_game) {
    RawGraph rg;
    std::map<Clause, uint32_t> clause_ids;
    auto intern_clause = [&](const Clause& c) {
        auto it = clause_ids.find(c);
        if (it != clause_ids.end()) return it->second;
        uint32_t id = (uint32_t)rg.clauses.size();
        clause_ids.emplace(c, id);
        rg.clauses.push_back(c);
        return id;
    };

    // Ownership per layer, from the solver's seat. Eve's game is solved
    // as-is: the letter picker is Adam, Eve resolves disjunctions, Adam
    // conjunctions. Adam's game is solved from Adam's seat (solver-Eve
    // is the real Adam), so the letter picker and the disjunction
    // resolver (both the real Eve) become solver-Adam.
    const bool state_eve = false;
    const bool choice_eve = !adam_game;
    const bool oblig_eve = adam_game;

    std::map<std::pair<StateId, StateId>, Vertex> state_ids;
    std::map<std::tuple<StateId, LetterId, StateId>, Vertex> choice_ids;
    std::map<std::pair<uint32_t, StateId>, Vertex> oblig_ids;

    auto add_vertex = [&](ConfigKind k, StateId q, StateId d, LetterId x, uint32_t cid,
                          bool eve, int p1, int p2) {
        rg.kind.push_back(k);
        rg.state.push_back(q);
        rg.ref_state.push_back(d);
        rg.letter.push_back(x);
        rg.clause_id.push_back(cid);
        rg.eve_owned.push_back(eve);
        rg.prio1.push_back(p1);
        rg.prio2.push_back(p2);
        rg.succ.emplace_back();
        return (Vertex)(rg.succ.size() - 1);
    };

    std::vector<Vertex> work;
    auto intern_state = [&](StateId q, StateId d) {
        auto it = state_ids.find({q, d});
        if (it != state_ids.end()) return it->second;
        int p1 = dnf.acceptance.parity_priority(q) + (adam_game ? 1 : 0);
        Vertex v = add_vertex(ConfigKind::State, q, d, 0, 0, state_eve, p1, -1);
        state_ids.emplace(std::make_pair(q, d), v);
        work.push_back(v);
        return v;
    };
    auto intern_choice = [&](StateId q, LetterId x, StateId d2) {
        auto it = choice_ids.find({q, x, d2});
        if (it != choice_ids.end()) return it->second;
        int p2 = ref.acceptance.parity_priority(d2) + (adam_game ? 0 : 1);
        Vertex v = add_vertex(ConfigKind::Choice, q, d2, x, 0, choice_eve, -1, p2);
        choice_ids.emplace(std::make_tuple(q, x, d2), v);
        work.push_back(v);
        return v;
    };
    auto intern_oblig = [&](uint32_t cid, LetterId x, StateId d2) {
        auto it = oblig_ids.find({cid, d2});
        if (it != oblig_ids.end()) return it->second;
        Vertex v = add_vertex(ConfigKind::Obligation, 0, d2, x, cid, oblig_eve, -1, -1);
        oblig_ids.emplace(std::make_pair(cid, d2), v);
        work.push_back(v);
        return v;
    };

    rg.root = intern_state(dnf.initial, ref.initial);
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        switch (rg.kind[v]) {
        case ConfigKind::State: {
            StateId q = rg.state[v], d = rg.ref_state[v];
            for (LetterId x = 0; x < dnf.num_letters(); ++x) {
                StateId d2 = ref.cond(d, ref_letter[x]).state();
                Vertex t = intern_choice(q, x, d2);
                rg.succ[v].push_back(t);
            }
            break;
        }
        case ConfigKind::Choice: {
            StateId q = rg.state[v], d2 = rg.ref_state[v];
            LetterId x = rg.letter[v];
            for (const Clause& c : dnf_shape_clauses(dnf.cond(q, x))) {
                Vertex t = intern_oblig(intern_clause(c), x, d2);
                rg.succ[v].push_back(t);
            }
            break;
        }
        case ConfigKind::Obligation: {
            StateId d2 = rg.ref_state[v];
            Clause c = rg.clauses[rg.clause_id[v]];
            for (StateId q2 : c) {
                Vertex t = intern_state(q2, d2);
                rg.succ[v].push_back(t);
            }
            break;
        }
        }
    }
    return rg;
}

using Perm = std::vector<uint8_t>;

Perm move_to_front(const Perm& p, uint32_t hit_f) {
    Perm out;
    out.reserve(p.size());
    for (uint8_t i : p)
        if (hit_f & (1u << i)) out.push_back(i);
    for (uint8_t i : p)
        if (!(hit_f & (1u << i))) out.push_back(i);
    return out;
}

int iar_priority(const Perm& p, uint32_t hit_e, uint32_t hit_f) {
    int e = 0, f = 0;
    for (size_t pos = 0; pos < p.size(); ++pos) {
        uint32_t bit = 1u << p[pos];
        if (hit_e & bit) e = (int)pos + 1;
        if (hit_f & bit) f = (int)pos + 1;
    }
    if (e > f) return 2 * e;
    return f > 0 ? 2 * f + 1 : 1;
}

} // namespace

IarCompiled iar_disjunction_to_parity(const TwoStreamGame& g) {
    const size_t n = g.succ.size();
    // one Rabin chain pair per even priority of each stream
    std::vector<uint32_t> hit_e(n, 0), hit_f(n, 0);
    size_t pair_count = 0;
    for (int stream = 1; stream <= 2; ++stream) {
        const std::vector<int>& prio = stream == 1 ? g.prio1 : g.prio2;
        std::vector<int> evens;
        for (int p : prio)
            if (p >= 0 && p % 2 == 0) evens.push_back(p);
        std::sort(evens.begin(), evens.end());
        evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
        for (int c : evens) {
            if (pair_count >= 16) throw Error("too many Rabin pairs for the IAR compilation");
            uint32_t bit = 1u << pair_count;
            for (Vertex v = 0; v < n; ++v) {
                if (prio[v] == c) hit_e[v] |= bit;
                if (prio[v] > c) hit_f[v] |= bit;
            }
            ++pair_count;
        }
    }

    IarCompiled out;
    std::map<Perm, uint32_t> perm_ids;
    std::vector<Perm> perms;
    auto intern_perm = [&](const Perm& p) {
        auto it = perm_ids.find(p);
        if (it != perm_ids.end()) return it->second;
        uint32_t id = (uint32_t)perms.size();
        perm_ids.emplace(p, id);
        perms.push_back(p);
        return id;
    };
    Perm identity(pair_count);
    for (size_t i = 0; i < pair_count; ++i) identity[i] = (uint8_t)i;

    std::map<std::pair<Vertex, uint32_t>, Vertex> ids;
    std::vector<std::pair<Vertex, uint32_t>> work;
    auto intern = [&](Vertex raw, uint32_t perm) {
        auto it = ids.find({raw, perm});
        if (it != ids.end()) return it->second;
        Vertex id = (Vertex)out.game.succ.size();
        ids.emplace(std::make_pair(raw, perm), id);
        out.game.succ.emplace_back();
        out.game.eve_owned.push_back(g.eve_owned[raw]);
        out.game.priority.push_back(iar_priority(perms[perm], hit_e[raw], hit_f[raw]));
        out.game.vnames.push_back("v" + std::to_string(raw) + "#" + std::to_string(perm));
        out.origin.push_back(raw);
        work.push_back({raw, perm});
        return id;
    };
    out.game.root = intern(g.root, intern_perm(identity));
    while (!work.empty()) {
        auto [raw, perm] = work.back();
        work.pop_back();
        Vertex id = ids.at({raw, perm});
        uint32_t next_perm = intern_perm(move_to_front(perms[perm], hit_f[raw]));
        for (Vertex u : g.succ[raw]) {
            Vertex t = intern(u, next_perm);
            out.game.succ[id].push_back(t);
        }
    }
    return out;
}

bool LetterGame::has_real_choice(ConfigKind k) const {
    for (Vertex v = 0; v < game.size(); ++v)
        if (kind[v] == k && game.succ[v].size() > 1) return true;
    return false;
}

static LetterGame build_letter_game(const Automaton& a, const Automaton& d_ref,
                                    bool adam_game) {
    require_valid(a);
    require_valid(d_ref);
    if (!a.acceptance.is_parity_like())
        throw Error("letter game needs a parity-convertible acceptance");
    if (!d_ref.acceptance.is_parity_like())
        throw Error("letter game reference needs a parity-convertible acceptance");
    if (!is_deterministic(d_ref)) throw Error("letter game reference must be deterministic");
    if (a.num_letters() != d_ref.num_letters())
        throw Error("letter game: alphabet mismatch between automaton and reference");
    std::vector<LetterId> ref_letter(a.num_letters());
    for (LetterId x = 0; x < a.num_letters(); ++x) {
        auto li = d_ref.letter_index(a.alphabet[x]);
        if (!li) throw Error("letter game: reference lacks letter " + a.alphabet[x]);
        ref_letter[x] = *li;
    }

    LetterGame lg;
    lg.adam_game = adam_game;
    lg.aut = normalize(a, NormalForm::Dnf);
    lg.ref = d_ref;

    RawGraph rg = build_raw(lg.aut, lg.ref, ref_letter, adam_game);
    TwoStreamGame ts{rg.succ, std::vector<bool>(rg.eve_owned.begin(), rg.eve_owned.end()),
                     rg.prio1, rg.prio2, rg.root};
    IarCompiled compiled = iar_disjunction_to_parity(ts);
    lg.game = std::move(compiled.game);
    for (Vertex v = 0; v < lg.game.size(); ++v) {
        Vertex raw = compiled.origin[v];
        lg.kind.push_back(rg.kind[raw]);
        lg.state.push_back(rg.state[raw]);
        lg.ref_state.push_back(rg.ref_state[raw]);
        lg.letter.push_back(rg.letter[raw]);
        lg.clause.push_back(rg.kind[raw] == ConfigKind::Obligation ? rg.clauses[rg.clause_id[raw]]
                                                                   : Clause{});
        std::string nm;
        switch (rg.kind[raw]) {
        case ConfigKind::State:
            nm = "(" + lg.aut.states[rg.state[raw]] + "," + lg.ref.states[rg.ref_state[raw]] + ")";
            break;
        case ConfigKind::Choice:
            nm = "(" + lg.aut.states[rg.state[raw]] + ":" + lg.aut.alphabet[rg.letter[raw]] + "," +
                 lg.ref.states[rg.ref_state[raw]] + ")";
            break;
        case ConfigKind::Obligation: {
            nm = "({";
            const Clause& c = rg.clauses[rg.clause_id[raw]];
            for (size_t i = 0; i < c.size(); ++i) nm += (i ? " " : "") + lg.aut.states[c[i]];
            nm += "}," + lg.ref.states[rg.ref_state[raw]] + ")";
            break;
        }
        }
        lg.game.vnames[v] = nm + "#" + lg.game.vnames[v].substr(lg.game.vnames[v].find('#') + 1);
    }
    return lg;
}

LetterGame build_eve_letter_game(const Automaton& a, const Automaton& d_ref) {
    return build_letter_game(a, d_ref, false);
}

LetterGame build_adam_letter_game(const Automaton& a, const Automaton& d_ref) {
    return build_letter_game(a, d_ref, true);
}

namespace {

/// Protagonist (solver-Eve) witness of the Eve game: memories are State
/// and Obligation vertices of the strategy-restricted reachable
/// subgraph; letters advance past the strategy's clause choice, states
/// report Adam's conjunct resolution.
Transducer extract_eve_witness(const LetterGame& lg, const Solution& sol) {
    if (!lg.has_real_choice(ConfigKind::Choice)) return Transducer::trivial("eve_witness");
    const ParityGame& g = lg.game;
    Transducer t;
    t.name = "eve_witness";
    std::vector<int64_t> mem_of(g.size(), -1);
    std::vector<Vertex> work;
    auto intern = [&](Vertex v) {
        if (mem_of[v] >= 0) return (MemoryId)mem_of[v];
        Token out = lg.kind[v] == ConfigKind::Obligation ? Token::make_clause(lg.clause[v])
                                                         : Token::epsilon();
        MemoryId m = t.add_memory(g.vnames[v], std::move(out));
        mem_of[v] = m;
        work.push_back(v);
        return m;
    };
    Vertex root = *g.root;
    if (!sol.eve_wins(root)) throw Error("witness extraction from a lost game");
    t.initial = intern(root);
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        MemoryId m = (MemoryId)mem_of[v];
        if (lg.kind[v] == ConfigKind::State) {
            for (Vertex o : g.succ[v]) {
                assert(sol.eve_wins(o));
                int64_t n = sol.eve_strategy.choice[o];
                if (n < 0) throw Error("missing strategy at a choice vertex");
                t.set_step(m, Token::make_letter(lg.letter[o]), intern((Vertex)n));
            }
        } else {
            assert(lg.kind[v] == ConfigKind::Obligation);
            for (Vertex s2 : g.succ[v])
                t.set_step(m, Token::make_state(lg.state[s2]), intern(s2));
        }
    }
    return t;
}

/// Protagonist witness of the Adam game: memories are State vertices;
/// a (letter, clause) input crosses the opponent's two moves and lands
/// on the strategy's state pick, which the memory outputs.
Transducer extract_adam_witness(const LetterGame& lg, const Solution& sol) {
    if (!lg.has_real_choice(ConfigKind::Obligation)) return Transducer::trivial("adam_witness");
    const ParityGame& g = lg.game;
    Transducer t;
    t.name = "adam_witness";
    std::vector<int64_t> mem_of(g.size(), -1);
    std::vector<Vertex> work;
    auto intern = [&](Vertex v) {
        if (mem_of[v] >= 0) return (MemoryId)mem_of[v];
        MemoryId m = t.add_memory(g.vnames[v], Token::make_state(lg.state[v]));
        mem_of[v] = m;
        work.push_back(v);
        return m;
    };
    Vertex root = *g.root;
    if (!sol.eve_wins(root)) throw Error("witness extraction from a lost game");
    t.initial = intern(root);
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        MemoryId m = (MemoryId)mem_of[v];
        for (Vertex o : g.succ[v]) {
            for (Vertex n : g.succ[o]) {
                assert(sol.eve_wins(n));
                int64_t s2 = sol.eve_strategy.choice[n];
                if (s2 < 0) throw Error("missing strategy at an obligation vertex");
                t.set_step(m, Token::make_letter_clause(lg.letter[o], lg.clause[n]),
                           intern((Vertex)s2));
            }
        }
    }
    return t;
}

/// Letter-emitting counter strategy of the opponent, used by the
/// one-player-game translation. Memories are State vertices of the
/// opponent's strategy subgraph; the memory outputs the letter the
/// strategy picks there, inputs are the protagonist's answers.
Transducer extract_counter(const LetterGame& lg, const Solution& sol) {
    const ParityGame& g = lg.game;
    const PositionalStrategy& st = sol.adam_strategy; // solver-Adam = the opponent
    Transducer t;
    t.name = lg.adam_game ? "eve_counter" : "adam_counter";
    std::vector<int64_t> mem_of(g.size(), -1);
    std::vector<Vertex> work;
    auto letter_of = [&](Vertex s) {
        int64_t o = st.choice[s];
        if (o < 0) throw Error("missing counter strategy at a state vertex");
        return std::make_pair((Vertex)o, lg.letter[(Vertex)o]);
    };
    auto intern = [&](Vertex v) {
        if (mem_of[v] >= 0) return (MemoryId)mem_of[v];
        MemoryId m = t.add_memory(g.vnames[v], Token::make_letter(letter_of(v).second));
        mem_of[v] = m;
        work.push_back(v);
        return m;
    };
    Vertex root = *g.root;
    if (sol.eve_wins(root)) throw Error("counter extraction from a won game");
    t.initial = intern(root);
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        MemoryId m = (MemoryId)mem_of[v];
        Vertex o = letter_of(v).first;
        if (!lg.adam_game) {
            // Eve answers with a clause, the strategy resolves the conjunct.
            for (Vertex n : g.succ[o]) {
                int64_t s2 = st.choice[n];
                if (s2 < 0) throw Error("missing counter strategy at an obligation vertex");
                t.set_step(m, Token::make_clause(lg.clause[n]), intern((Vertex)s2));
            }
        } else {
            // The strategy picks the clause too; Adam answers with a state.
            int64_t n = st.choice[o];
            if (n < 0) throw Error("missing counter strategy at a choice vertex");
            for (Vertex s2 : g.succ[(Vertex)n])
                t.set_step(m, Token::make_state(lg.state[s2]), intern(s2));
        }
    }
    return t;
}

} // namespace

LetterGameVerdict solve_letter_game(const LetterGame& lg) {
    LetterGameVerdict v;
    v.solution = solve_parity(lg.game);
    v.compliant = v.solution.eve_wins(*lg.game.root);
    if (v.compliant)
        v.witness = lg.adam_game ? extract_adam_witness(lg, v.solution)
                                 : extract_eve_witness(lg, v.solution);
    else
        v.counter = extract_counter(lg, v.solution);
    return v;
}

} // namespace gfgaut
