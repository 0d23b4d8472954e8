/* gfg.cpp -- GFG verdicts, the witness product, replay games */

#include "gfgaut/gfg.hpp"

#include "gfgaut/constructions.hpp"
#include "gfgaut/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace gfgaut {

GfgVerdict is_gfg(const Automaton& a, const Automaton& d_ref) {
    GfgVerdict v;
    LetterGame eg = build_eve_letter_game(a, d_ref);
    LetterGameVerdict ev = solve_letter_game(eg);
    v.nondeterminism_compliant = ev.compliant;
    if (ev.compliant) v.eve_witness = std::move(ev.witness);
    else v.adam_counter = std::move(ev.counter);

    LetterGame ag = build_adam_letter_game(a, d_ref);
    LetterGameVerdict av = solve_letter_game(ag);
    v.universality_compliant = av.compliant;
    if (av.compliant) v.adam_witness = std::move(av.witness);
    else v.eve_counter = std::move(av.counter);
    return v;
}

std::pair<Transducer, Transducer> extract_hd_transducers(const Automaton& a,
                                                         const Automaton& d_ref) {
    GfgVerdict v = is_gfg(a, d_ref);
    if (!v.gfg()) throw NotGfg(std::move(v));
    return {std::move(*v.eve_witness), std::move(*v.adam_witness)};
}

Automaton determinize_gfg(const Automaton& a, const Transducer& m_e, const Transducer& m_a) {
    Automaton dnf = normalize(a, NormalForm::Dnf);
    require_valid(dnf);

    struct Key {
        StateId q;
        MemoryId x, y;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, StateId> ids;
    std::vector<Key> tuples;
    auto intern = [&](StateId q, MemoryId x, MemoryId y) {
        Key k{q, x, y};
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        StateId id = (StateId)tuples.size();
        ids.emplace(k, id);
        tuples.push_back(k);
        return id;
    };

    Automaton d;
    d.name = (a.name.empty() ? "aut" : a.name) + "_det";
    d.alphabet = dnf.alphabet;
    StateId init = intern(dnf.initial, m_a.initial, m_e.initial);
    std::vector<std::optional<Cond>> conds;
    for (size_t done = 0; done < tuples.size(); ++done) {
        Key k = tuples[done];
        for (LetterId ltr = 0; ltr < dnf.num_letters(); ++ltr) {
            MemoryId y1 = m_e.next_or_throw(k.y, Token::make_letter(ltr));
            ClauseList clauses = dnf_shape_clauses(dnf.cond(k.q, ltr));
            Clause chosen;
            if (clauses.size() == 1) {
                chosen = clauses.front();
            } else {
                const Token& out = m_e.output[y1];
                if (out.kind != Token::Kind::Clause)
                    throw Error("transducer I/O shape mismatch: expected a clause output");
                if (std::find(clauses.begin(), clauses.end(), out.clause) == clauses.end())
                    throw Error("transducer I/O shape mismatch: clause not available");
                chosen = out.clause;
            }
            MemoryId x1 = m_a.next_or_throw(k.x, Token::make_letter_clause(ltr, chosen));
            StateId q2;
            if (chosen.size() == 1) {
                q2 = chosen.front();
            } else {
                const Token& out = m_a.output[x1];
                if (out.kind != Token::Kind::State)
                    throw Error("transducer I/O shape mismatch: expected a state output");
                if (!std::binary_search(chosen.begin(), chosen.end(), out.state))
                    throw Error("transducer I/O shape mismatch: state outside the clause");
                q2 = out.state;
            }
            MemoryId y2 = m_e.next_or_throw(y1, Token::make_state(q2));
            conds.push_back(Cond::leaf(intern(q2, x1, y2)));
        }
    }
    d.states.resize(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i)
        d.states[i] = dnf.states[tuples[i].q] + "_" + std::to_string(tuples[i].x) + "_" +
                      std::to_string(tuples[i].y);
    d.states = unique_names(std::move(d.states));
    d.initial = init;
    d.delta = std::move(conds);

    switch (dnf.acceptance.kind) {
    case AccKind::FiniteWords:
    case AccKind::Weak:
    case AccKind::Buchi:
    case AccKind::CoBuchi: {
        std::vector<StateId> set;
        for (size_t i = 0; i < tuples.size(); ++i)
            if (dnf.acceptance.in_set(tuples[i].q)) set.push_back((StateId)i);
        Acceptance acc;
        acc.kind = dnf.acceptance.kind;
        std::sort(set.begin(), set.end());
        acc.set = std::move(set);
        d.acceptance = acc;
        break;
    }
    case AccKind::Parity: {
        std::vector<int> prio(tuples.size());
        for (size_t i = 0; i < tuples.size(); ++i)
            prio[i] = dnf.acceptance.parity_priority(tuples[i].q);
        d.acceptance = Acceptance::parity(std::move(prio));
        break;
    }
    default: throw Error("determinize_gfg: unsupported acceptance");
    }
    assert(d.num_states() <= dnf.num_states() * m_a.memory_count() * m_e.memory_count());
    require_valid(d);
    return d;
}

std::pair<Transducer, Transducer> uniform_witnesses(
    const Automaton& a_dnf,
    const std::function<uint32_t(StateId, LetterId, const ClauseList&)>& pick_clause,
    const std::function<StateId(StateId, LetterId, const Clause&)>& pick_state) {
    // Memories track the current automaton state; Eve's side adds an
    // intermediate memory per (state, letter) holding the clause output.
    Transducer me;
    me.name = "uniform_eve";
    Transducer ma;
    ma.name = "uniform_adam";
    const size_t n = a_dnf.num_states();
    const size_t L = a_dnf.num_letters();
    for (StateId q = 0; q < n; ++q) {
        me.add_memory("s_" + a_dnf.states[q], Token::epsilon());
        ma.add_memory("s_" + a_dnf.states[q], Token::make_state(q));
    }
    for (StateId q = 0; q < n; ++q) {
        for (LetterId x = 0; x < L; ++x) {
            ClauseList clauses = dnf_shape_clauses(a_dnf.cond(q, x));
            uint32_t ci = pick_clause(q, x, clauses);
            if (ci >= clauses.size()) throw Error("uniform_witnesses: clause pick out of range");
            const Clause& c = clauses[ci];
            MemoryId mid = me.add_memory("c_" + a_dnf.states[q] + "_" + a_dnf.alphabet[x],
                                         Token::make_clause(c));
            me.set_step(q, Token::make_letter(x), mid);
            for (StateId t : c) me.set_step(mid, Token::make_state(t), t);
            // Adam's side answers every clause Eve may pick, not only the
            // chosen one.
            for (const Clause& any : clauses) {
                StateId t = pick_state(q, x, any);
                if (!std::binary_search(any.begin(), any.end(), t))
                    throw Error("uniform_witnesses: state pick outside the clause");
                ma.set_step(q, Token::make_letter_clause(x, any), t);
            }
        }
    }
    me.initial = a_dnf.initial;
    ma.initial = a_dnf.initial;
    return {std::move(me), std::move(ma)};
}

ResidualReport residual_check(const Automaton& a, const Transducer& m_e, const Transducer& m_a) {
    if (a.acceptance.kind != AccKind::FiniteWords && a.acceptance.kind != AccKind::Weak)
        throw Error("residual_check applies to finite-word and weak automata only");
    ResidualReport rep;
    rep.automaton_states = a.num_states();
    Automaton d = determinize_gfg(a, m_e, m_a);
    if (a.acceptance.kind == AccKind::FiniteWords) {
        rep.minimal_deterministic_size = hopcroft_minimize(d).num_states();
        rep.residual_classes = dfa_residual_classes(d);
    } else {
        // quotient by exact language equality of residuals
        std::vector<StateId> repr;
        for (StateId q = 0; q < d.num_states(); ++q) {
            bool fresh = true;
            for (StateId r : repr) {
                if (det_language_equal(residual(d, q), residual(d, r))) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) repr.push_back(q);
        }
        rep.residual_classes = repr.size();
        rep.minimal_deterministic_size = repr.size();
    }
    rep.pass = rep.minimal_deterministic_size <= rep.automaton_states;
    return rep;
}

ResidualReport residual_check_with_reference(const Automaton& a, const Automaton& d_ref) {
    if (a.acceptance.kind == AccKind::Weak) {
        CheckVerdict rv = reference_check(a, d_ref, 4);
        if (rv.kind == VerdictKind::Falsified)
            throw Error("residual check: the reference does not recognize L(a)");
        auto [m_e, m_a] = extract_hd_transducers(a, d_ref);
        return residual_check(a, m_e, m_a);
    }
    if (a.acceptance.kind != AccKind::FiniteWords)
        throw Error("residual_check applies to finite-word and weak automata only");
    if (d_ref.acceptance.kind != AccKind::FiniteWords || !is_deterministic(d_ref))
        throw Error("residual check needs a deterministic finite-word reference");
    // Finite words lie outside the letter-game machinery; search the
    // positional resolutions for a pair of witnesses whose product is
    // language-equal to the reference.
    Automaton dnf = normalize(a, NormalForm::Dnf);
    std::vector<ClauseList> all;
    std::vector<size_t> widths;
    for (StateId q = 0; q < dnf.num_states(); ++q)
        for (LetterId x = 0; x < dnf.num_letters(); ++x) {
            all.push_back(dnf_shape_clauses(dnf.cond(q, x)));
            widths.push_back(all.back().size());
        }
    size_t combos = 1;
    for (size_t w : widths) {
        combos *= w;
        if (combos > 4096) throw Error("residual check: resolution search space too large");
    }
    std::vector<uint32_t> pick(widths.size(), 0);
    const size_t L = dnf.num_letters();
    while (true) {
        auto choose_clause = [&](StateId q, LetterId x, const ClauseList&) {
            return pick[q * L + x];
        };
        auto choose_state = [&](StateId, LetterId, const Clause& c) { return c.front(); };
        auto [m_e, m_a] = uniform_witnesses(dnf, choose_clause, choose_state);
        Automaton det = determinize_gfg(dnf, m_e, m_a);
        if (equivalence(det, d_ref, 0).kind == VerdictKind::Verified)
            return residual_check(a, m_e, m_a);
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < widths[i]) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    throw Error("residual check: no positional resolution matches the reference");
}

namespace {

struct ReplayBuilder {
    ParityGame g;
    std::map<std::pair<Vertex, MemoryId>, Vertex> ids;
    std::vector<std::pair<Vertex, MemoryId>> work;
    int64_t sink = -1;

    Vertex intern(Vertex v, MemoryId m, bool eve, int prio, const std::string& name) {
        auto it = ids.find({v, m});
        if (it != ids.end()) return it->second;
        Vertex id = (Vertex)g.succ.size();
        ids.emplace(std::make_pair(v, m), id);
        g.succ.emplace_back();
        g.eve_owned.push_back(eve);
        g.priority.push_back(prio);
        g.vnames.push_back(name + "~m" + std::to_string(m));
        work.push_back({v, m});
        return id;
    }

    /// Self-looping sink with the given parity; entering it decides the play.
    Vertex losing_sink(bool eve_loses) {
        if (sink < 0) {
            Vertex id = (Vertex)g.succ.size();
            g.succ.emplace_back();
            g.eve_owned.push_back(true);
            g.priority.push_back(eve_loses ? 1 : 2);
            g.vnames.push_back("sink");
            g.succ[id].push_back(id);
            sink = id;
        }
        return (Vertex)sink;
    }
};

} // namespace

ParityGame mc_replay_game(const Automaton& a_dnf, const LassoWord& w, const Transducer& t,
                          Player side) {
    require_valid(a_dnf);
    if (!a_dnf.acceptance.is_parity_like())
        throw Error("replay needs a parity-convertible acceptance");
    const size_t len = w.total_length();
    for (size_t i = 0; i < len; ++i)
        if (w.at(i) >= a_dnf.num_letters()) throw Error("lasso letter outside the alphabet");

    // Layered positions: state (i, q) -> or (i, q) -> clause (i, C) ->
    // state (next(i), q'). Vertex ids pack the layer in the key space.
    enum Layer : uint32_t { S = 0, O = 1, A = 2 };
    std::map<Clause, uint32_t> clause_ids;
    std::vector<Clause> clauses;
    auto cid = [&](const Clause& c) {
        auto it = clause_ids.find(c);
        if (it != clause_ids.end()) return it->second;
        uint32_t id = (uint32_t)clauses.size();
        clause_ids.emplace(c, id);
        clauses.push_back(c);
        return id;
    };
    auto key = [&](Layer l, size_t i, uint32_t payload) {
        return (Vertex)(((i * 3 + l) << 16) | payload);
    };
    if (a_dnf.num_states() >= (1 << 16)) throw Error("replay game too large");

    ReplayBuilder b;
    auto next_pos = [&](size_t i) { return i + 1 == len ? w.loop_start() : i + 1; };

    std::function<Vertex(size_t, StateId, MemoryId)> intern_state =
        [&](size_t i, StateId q, MemoryId m) {
            return b.intern(key(S, i, q), m, true,
                            a_dnf.acceptance.parity_priority(q) + 2,
                            "(" + std::to_string(i) + "," + a_dnf.states[q] + ")");
        };

    // Work items carry their own expansion; decode the packed key.
    ParityGame& g = b.g;
    g.root = intern_state(0, a_dnf.initial, t.initial);
    while (!b.work.empty()) {
        auto [packed, m] = b.work.back();
        b.work.pop_back();
        Vertex id = b.ids.at({packed, m});
        uint32_t payload = packed & 0xffff;
        size_t pos = (packed >> 16) / 3;
        Layer layer = (Layer)((packed >> 16) % 3);
        LetterId x = w.at(pos);
        switch (layer) {
        case S: {
            // unique move: consume the letter at this position
            MemoryId m2 = m;
            if (side == Player::Eve) {
                auto n = t.next(m, Token::make_letter(x));
                if (!n) {
                    Vertex sink = b.losing_sink(true);
                    g.succ[id].push_back(sink);
                    break;
                }
                m2 = *n;
            }
            Vertex tv = b.intern(key(O, pos, payload), m2, true, 0,
                                 "(" + std::to_string(pos) + "," + a_dnf.states[payload] + "?");
            g.succ[id].push_back(tv);
            break;
        }
        case O: {
            ClauseList cl = dnf_shape_clauses(a_dnf.cond(payload, x));
            auto push_clause = [&](const Clause& c) {
                MemoryId m2 = m;
                if (side == Player::Adam) {
                    auto n = t.next(m, Token::make_letter_clause(x, c));
                    if (!n) {
                        // Adam's transducer cannot answer this clause of Eve's
                        Vertex sink = b.losing_sink(false);
                        g.succ[id].push_back(sink);
                        return;
                    }
                    m2 = *n;
                }
                Vertex tv = b.intern(key(A, pos, cid(c)), m2, false, 0,
                                     "(" + std::to_string(pos) + ",{..})");
                g.succ[id].push_back(tv);
            };
            if (side == Player::Eve && cl.size() > 1) {
                const Token& out = t.output[m];
                bool ok = out.kind == Token::Kind::Clause &&
                          std::find(cl.begin(), cl.end(), out.clause) != cl.end();
                if (!ok) {
                    Vertex sink = b.losing_sink(true);
                    g.succ[id].push_back(sink);
                    break;
                }
                push_clause(out.clause);
            } else {
                for (const Clause& c : cl) push_clause(c);
            }
            break;
        }
        case A: {
            const Clause c = clauses[payload];
            size_t np = next_pos(pos);
            if (side == Player::Adam && c.size() > 1) {
                const Token& out = t.output[m];
                bool ok = out.kind == Token::Kind::State &&
                          std::binary_search(c.begin(), c.end(), out.state);
                if (!ok) {
                    Vertex sink = b.losing_sink(false);
                    g.succ[id].push_back(sink);
                    break;
                }
                Vertex tv = intern_state(np, out.state, m);
                g.succ[id].push_back(tv);
            } else {
                for (StateId q2 : c) {
                    MemoryId m2 = m;
                    if (side == Player::Eve) {
                        auto n = t.next(m, Token::make_state(q2));
                        if (!n) {
                            Vertex sink = b.losing_sink(true);
                            g.succ[id].push_back(sink);
                            continue;
                        }
                        m2 = *n;
                    }
                    Vertex tv = intern_state(np, q2, m2);
                    g.succ[id].push_back(tv);
                }
            }
            break;
        }
        }
    }
    return g;
}

ParityGame letter_replay_game(const LetterGame& lg, const Transducer& t) {
    if (lg.adam_game) throw Error("letter_replay_game expects Eve's letter game");
    const ParityGame& base = lg.game;
    ReplayBuilder b;
    auto intern = [&](Vertex v, MemoryId m) {
        return b.intern(v, m, base.eve_owned[v], base.priority[v], base.vnames[v]);
    };
    ParityGame& g = b.g;
    g.root = intern(*base.root, t.initial);
    while (!b.work.empty()) {
        auto [v, m] = b.work.back();
        b.work.pop_back();
        Vertex id = b.ids.at({v, m});
        switch (lg.kind[v]) {
        case ConfigKind::State:
            for (Vertex o : base.succ[v]) {
                auto n = t.next(m, Token::make_letter(lg.letter[o]));
                Vertex tv = n ? intern(o, *n) : b.losing_sink(true);
                g.succ[id].push_back(tv);
            }
            break;
        case ConfigKind::Choice: {
            if (base.succ[v].size() == 1) {
                Vertex tv = intern(base.succ[v][0], m);
                g.succ[id].push_back(tv);
                break;
            }
            const Token& out = t.output[m];
            int64_t target = -1;
            if (out.kind == Token::Kind::Clause) {
                for (Vertex n : base.succ[v])
                    if (lg.clause[n] == out.clause) target = n;
            }
            Vertex tv = target < 0 ? b.losing_sink(true) : intern((Vertex)target, m);
            g.succ[id].push_back(tv);
            break;
        }
        case ConfigKind::Obligation:
            for (Vertex s2 : base.succ[v]) {
                auto n = t.next(m, Token::make_state(lg.state[s2]));
                Vertex tv = n ? intern(s2, *n) : b.losing_sink(true);
                g.succ[id].push_back(tv);
            }
            break;
        }
    }
    return g;
}

LassoWord counterexample_word(const LetterGame& lg, const Solution& sol, const Transducer& t) {
    if (lg.adam_game) throw Error("counterexample_word expects Eve's letter game");
    if (sol.eve_wins(*lg.game.root)) throw Error("counterexample_word: Eve wins this game");
    const ParityGame& g = lg.game;
    std::map<std::pair<Vertex, MemoryId>, size_t> seen;
    std::vector<LetterId> letters;
    Vertex s = *g.root;
    MemoryId y = t.initial;
    while (true) {
        auto it = seen.find({s, y});
        if (it != seen.end()) {
            std::vector<LetterId> prefix(letters.begin(), letters.begin() + it->second);
            std::vector<LetterId> period(letters.begin() + it->second, letters.end());
            return LassoWord::make(std::move(prefix), std::move(period));
        }
        seen.emplace(std::make_pair(s, y), letters.size());

        int64_t oc = sol.adam_strategy.choice[s];
        if (oc < 0) throw Error("counterexample_word: missing counter strategy");
        Vertex o = (Vertex)oc;
        LetterId x = lg.letter[o];
        letters.push_back(x);
        if (auto n = t.next(y, Token::make_letter(x))) y = *n;

        Vertex pick = g.succ[o].front();
        const Token& out = t.output[y];
        if (g.succ[o].size() > 1 && out.kind == Token::Kind::Clause) {
            for (Vertex n : g.succ[o])
                if (lg.clause[n] == out.clause) pick = n;
        }
        int64_t s2 = sol.adam_strategy.choice[pick];
        if (s2 < 0) throw Error("counterexample_word: missing counter strategy");
        s = (Vertex)s2;
        if (auto n = t.next(y, Token::make_state(lg.state[s]))) y = *n;
    }
}

} // namespace gfgaut
