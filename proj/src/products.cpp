/* products.cpp -- Def-style synchronized products and their derived games */

#include "gfgaut/products.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace gfgaut {

StateId det_step(const Automaton& det, StateId q, LetterId x) {
    const Cond& c = det.cond(q, x);
    if (!c.is_leaf()) throw Error("automaton is not deterministic at " + det.states[q]);
    return c.state();
}

namespace {

/// Distinct condition values reachable from the automaton's transition
/// conditions under binary splitting; used for the construction bound.
size_t split_closure_size(const Automaton& a) {
    std::set<Cond> seen;
    std::vector<Cond> work;
    for (const auto& c : a.delta)
        if (c && seen.insert(*c).second) work.push_back(*c);
    for (StateId q = 0; q < a.num_states(); ++q) {
        Cond l = Cond::leaf(q);
        if (seen.insert(l).second) work.push_back(l);
    }
    while (!work.empty()) {
        Cond c = std::move(work.back());
        work.pop_back();
        if (c.is_leaf()) continue;
        auto [l, r] = c.split_binary();
        if (seen.insert(l).second) work.push_back(l);
        if (seen.insert(r).second) work.push_back(r);
    }
    return seen.size();
}

} // namespace

ProductGraph product_graph(const Arena& r, const Automaton& a) {
    r.check();
    require_valid(a);
    std::vector<LetterId> arena_letter(r.size());
    for (Vertex v = 0; v < r.size(); ++v) {
        auto li = a.letter_index(r.labels[v]);
        if (!li)
            throw Error("arena label '" + r.labels[v] + "' is not a letter of " +
                        (a.name.empty() ? "the automaton" : a.name));
        arena_letter[v] = *li;
    }

    ProductGraph pg;
    std::map<std::pair<Vertex, Cond>, Vertex> ids;
    std::vector<std::pair<Vertex, Cond>> work;
    auto intern = [&](Vertex v, const Cond& c) {
        auto it = ids.find({v, c});
        if (it != ids.end()) return it->second;
        Vertex id = (Vertex)pg.succ.size();
        ids.emplace(std::make_pair(v, c), id);
        pg.succ.emplace_back();
        bool eve = c.kind() == CondKind::Or || (c.is_leaf() && r.eve_owned[v]);
        pg.eve_owned.push_back(eve);
        pg.aut_state.push_back(c.is_leaf() ? std::optional<StateId>(c.state()) : std::nullopt);
        pg.arena_vertex.push_back(v);
        pg.vnames.push_back("(" + r.vnames[v] + "," + cond_to_string(c, a.states) + ")");
        work.push_back({v, c});
        return id;
    };

    if (r.root) {
        pg.root = intern(*r.root, a.cond(a.initial, arena_letter[*r.root]));
    } else {
        for (Vertex v = 0; v < r.size(); ++v) intern(v, a.cond(a.initial, arena_letter[v]));
    }
    while (!work.empty()) {
        auto [v, c] = std::move(work.back());
        work.pop_back();
        Vertex id = ids.at({v, c});
        if (c.is_leaf()) {
            for (Vertex u : r.succ[v]) {
                Vertex t = intern(u, a.cond(c.state(), arena_letter[u]));
                pg.succ[id].push_back(t);
            }
        } else {
            auto [l, rgt] = c.split_binary();
            Vertex tl = intern(v, l);
            pg.succ[id].push_back(tl);
            Vertex tr = intern(v, rgt);
            pg.succ[id].push_back(tr);
        }
    }
    assert(pg.succ.size() <= r.size() * split_closure_size(a));
    return pg;
}

ParityGame synchronized_product(const Arena& r, const Automaton& a) {
    if (!a.acceptance.is_parity_like())
        throw Error("synchronized product needs a parity-convertible acceptance");
    ProductGraph pg = product_graph(r, a);
    ParityGame g;
    g.succ = std::move(pg.succ);
    g.eve_owned = std::move(pg.eve_owned);
    g.vnames = std::move(pg.vnames);
    g.root = pg.root;
    g.priority.resize(g.succ.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (pg.aut_state[v])
            g.priority[v] = a.acceptance.parity_priority(*pg.aut_state[v]) + 2;
    }
    return g;
}

namespace {

Arena lasso_arena(const LassoWord& w, const Automaton& a) {
    Arena r;
    for (size_t i = 0; i < w.total_length(); ++i) {
        LetterId x = w.at(i);
        if (x >= a.num_letters()) throw Error("lasso letter outside the automaton alphabet");
        r.add_vertex("p" + std::to_string(i), a.alphabet[x], true);
    }
    for (size_t i = 0; i < w.total_length(); ++i) {
        size_t j = i + 1 == w.total_length() ? w.loop_start() : i + 1;
        r.add_edge((Vertex)i, (Vertex)j);
    }
    r.root = 0;
    return r;
}

} // namespace

ParityGame model_checking_game(const LassoWord& w, const Automaton& a) {
    return synchronized_product(lasso_arena(w, a), a);
}

bool accepts(const Automaton& a, const LassoWord& w) {
    ParityGame g = model_checking_game(w, a);
    Solution s = solve_parity(g);
    return s.eve_wins(*g.root);
}

bool accepts_finite(const Automaton& a, const std::vector<LetterId>& word) {
    if (a.acceptance.kind != AccKind::FiniteWords)
        throw Error("finite-word membership needs finite-word acceptance");
    require_valid(a);
    const size_t n = a.num_states();
    std::vector<bool> acc(n), next(n);
    for (StateId q = 0; q < n; ++q) acc[q] = a.acceptance.in_set(q);
    for (size_t i = word.size(); i-- > 0;) {
        if (word[i] >= a.num_letters()) throw Error("word letter outside the alphabet");
        for (StateId q = 0; q < n; ++q)
            next[q] = a.cond(q, word[i]).eval([&](StateId t) { return acc[t]; });
        std::swap(acc, next);
    }
    return acc[a.initial];
}

Automaton compose(const Automaton& outer, const Automaton& inner) {
    require_valid(outer);
    require_valid(inner);
    if (outer.acceptance.kind != AccKind::Labels)
        throw Error("compose: outer automaton must carry state labels");
    if (!inner.acceptance.is_parity_like())
        throw Error("compose: inner automaton must have a parity-convertible acceptance");
    std::vector<LetterId> beta(outer.num_states());
    for (StateId q = 0; q < outer.num_states(); ++q) {
        auto li = inner.letter_index(outer.acceptance.labels[q]);
        if (!li)
            throw Error("compose: label '" + outer.acceptance.labels[q] +
                        "' is not a letter of the inner automaton");
        beta[q] = *li;
    }

    Automaton prod;
    prod.name = (outer.name.empty() ? "outer" : outer.name) + "_x_" +
                (inner.name.empty() ? "inner" : inner.name);
    prod.alphabet = outer.alphabet;

    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto intern = [&](StateId qb, StateId qa) {
        auto it = ids.find({qb, qa});
        if (it != ids.end()) return it->second;
        StateId id = (StateId)pairs.size();
        ids.emplace(std::make_pair(qb, qa), id);
        pairs.push_back({qb, qa});
        return id;
    };
    StateId init = intern(outer.initial, inner.initial);

    // f unfolds the outer condition, g the inner one (leaves pair up).
    std::function<Cond(StateId, const Cond&)> g_rec = [&](StateId qb, const Cond& ca) -> Cond {
        if (ca.is_leaf()) return Cond::leaf(intern(qb, ca.state()));
        std::vector<Cond> ops;
        ops.reserve(ca.operands().size());
        for (const auto& op : ca.operands()) ops.push_back(g_rec(qb, op));
        return Cond::make(ca.kind(), std::move(ops));
    };
    std::function<Cond(const Cond&, StateId)> f_rec = [&](const Cond& cb, StateId qa) -> Cond {
        if (cb.is_leaf())
            return g_rec(cb.state(), inner.cond(qa, beta[cb.state()]));
        std::vector<Cond> ops;
        ops.reserve(cb.operands().size());
        for (const auto& op : cb.operands()) ops.push_back(f_rec(op, qa));
        return Cond::make(cb.kind(), std::move(ops));
    };

    std::vector<std::optional<Cond>> conds; // pair-state x letter, grown on demand
    for (size_t done = 0; done < pairs.size(); ++done) {
        auto [qb, qa] = pairs[done];
        for (LetterId x = 0; x < outer.num_letters(); ++x)
            conds.push_back(f_rec(outer.cond(qb, x), qa));
    }

    prod.states.resize(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i)
        prod.states[i] = outer.states[pairs[i].first] + "_" + inner.states[pairs[i].second];
    prod.states = unique_names(std::move(prod.states));
    prod.initial = init;
    prod.delta = std::move(conds);

    switch (inner.acceptance.kind) {
    case AccKind::Weak:
    case AccKind::Buchi:
    case AccKind::CoBuchi: {
        std::vector<StateId> set;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (inner.acceptance.in_set(pairs[i].second)) set.push_back((StateId)i);
        switch (inner.acceptance.kind) {
        case AccKind::CoBuchi: prod.acceptance = Acceptance::co_buchi(std::move(set)); break;
        case AccKind::Weak: prod.acceptance = Acceptance::weak(std::move(set)); break;
        default: prod.acceptance = Acceptance::buchi(std::move(set)); break;
        }
        break;
    }
    case AccKind::Parity: {
        std::vector<int> prio(pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i)
            prio[i] = inner.acceptance.parity_priority(pairs[i].second);
        prod.acceptance = Acceptance::parity(std::move(prio));
        break;
    }
    default: throw Error("compose: unsupported inner acceptance");
    }
    assert(prod.num_states() <= outer.num_states() * inner.num_states());
    return prod;
}

Automaton game_as_automaton(const ParityGame& g) {
    g.check();
    if (!g.root) throw Error("game_as_automaton needs a rooted game");
    Automaton a;
    a.name = "game";
    a.alphabet = {"a"};
    a.states.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) a.states[v] = sanitize_identifier(g.vnames[v]);
    a.states = unique_names(std::move(a.states));
    a.initial = *g.root;
    a.resize_delta();
    for (Vertex v = 0; v < g.size(); ++v) {
        std::vector<Cond> ops;
        ops.reserve(g.succ[v].size());
        for (Vertex u : g.succ[v]) ops.push_back(Cond::leaf(u));
        a.set_cond(v, 0, g.eve_owned[v] ? Cond::disj(std::move(ops)) : Cond::conj(std::move(ops)));
    }
    a.acceptance = Acceptance::parity(std::vector<int>(g.priority.begin(), g.priority.end()));
    return a;
}

Arena transducer_to_one_player_game(const Transducer& m,
                                    const std::vector<std::string>& alphabet, Player owner) {
    Arena r;
    for (MemoryId i = 0; i < m.memory_count(); ++i) {
        const Token& out = m.output[i];
        if (out.kind != Token::Kind::Letter)
            throw Error("transducer output at memory " + std::to_string(i) +
                        " carries no letter component");
        if (out.letter >= alphabet.size()) throw Error("transducer letter out of range");
        r.add_vertex(m.memory_names.empty() ? "m" + std::to_string(i) : m.memory_names[i],
                     alphabet[out.letter], owner == Player::Eve);
    }
    for (const auto& [key, to] : m.step) {
        Vertex from = key.first;
        if (std::find(r.succ[from].begin(), r.succ[from].end(), to) == r.succ[from].end())
            r.add_edge(from, to);
    }
    r.root = m.initial;
    r.check();
    return r;
}

ParityGame monitor_game(const ProductGraph& pg, const std::vector<LetterId>& beta,
                        const Automaton& det_ref) {
    if (!is_deterministic(det_ref) || !det_ref.acceptance.is_parity_like())
        throw Error("monitor_game needs a deterministic parity-convertible reference");
    if (!pg.root) throw Error("monitor_game needs a rooted product");
    ParityGame g;
    std::map<std::pair<Vertex, StateId>, Vertex> ids;
    std::vector<std::pair<Vertex, StateId>> work;
    auto intern = [&](Vertex v, StateId d_before) -> Vertex {
        // advance the monitor when entering a state vertex
        StateId d = d_before;
        int prio = 0;
        if (pg.aut_state[v]) {
            d = det_step(det_ref, d_before, beta[*pg.aut_state[v]]);
            prio = det_ref.acceptance.parity_priority(d) + 2;
        }
        auto it = ids.find({v, d});
        if (it != ids.end()) return it->second;
        Vertex id = (Vertex)g.succ.size();
        ids.emplace(std::make_pair(v, d), id);
        g.succ.emplace_back();
        g.eve_owned.push_back(pg.eve_owned[v]);
        g.priority.push_back(prio);
        g.vnames.push_back(pg.vnames[v] + "@" + det_ref.states[d]);
        work.push_back({v, d});
        return id;
    };
    g.root = intern(*pg.root, det_ref.initial);
    while (!work.empty()) {
        auto [v, d] = work.back();
        work.pop_back();
        Vertex id = ids.at({v, d});
        for (Vertex u : pg.succ[v]) {
            Vertex t = intern(u, d);
            g.succ[id].push_back(t);
        }
    }
    return g;
}

} // namespace gfgaut
