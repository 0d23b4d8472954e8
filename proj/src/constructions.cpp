/* constructions.cpp -- breakpoint, subset constructions, Hopcroft, the ACW pipeline */

#include "gfgaut/constructions.hpp"

#include "gfgaut/gfg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace gfgaut {

namespace {

using StateSet = std::vector<StateId>; // sorted

std::string set_name(const StateSet& s, const std::vector<std::string>& names) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + names[s[i]];
    return out + "}";
}

/// Calls fn for every combination of one clause per state of S.
void for_each_resolution(const std::vector<ClauseList>& options,
                         const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> pick(options.size(), 0);
    while (true) {
        fn(pick);
        size_t i = 0;
        for (; i < options.size(); ++i) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
        }
        if (i == options.size()) break;
    }
}

} // namespace

Automaton breakpoint(const Automaton& a) {
    if (a.acceptance.kind != AccKind::Buchi && a.acceptance.kind != AccKind::Weak)
        throw Error("breakpoint construction needs a Buchi acceptance");
    Automaton dnf = normalize(a, NormalForm::Dnf);
    require_valid(dnf);
    const size_t n = dnf.num_states();
    auto owes = [&](StateId q) { return !dnf.acceptance.in_set(q); };

    using BpState = std::pair<StateSet, StateSet>; // <S, O>, O subset of S
    std::map<BpState, StateId> ids;
    std::vector<BpState> list;
    auto intern = [&](BpState s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        StateId id = (StateId)list.size();
        ids.emplace(s, id);
        list.push_back(std::move(s));
        return id;
    };

    StateSet init_o;
    if (owes(dnf.initial)) init_o.push_back(dnf.initial);
    StateId init = intern({{dnf.initial}, init_o});

    std::vector<std::optional<Cond>> conds;
    for (size_t done = 0; done < list.size(); ++done) {
        // copy: `list` grows while resolutions are interned
        const BpState current = list[done];
        for (LetterId x = 0; x < dnf.num_letters(); ++x) {
            const auto& [S, O] = current;
            std::vector<ClauseList> options;
            options.reserve(S.size());
            for (StateId q : S) options.push_back(dnf_shape_clauses(dnf.cond(q, x)));
            std::set<BpState> targets;
            for_each_resolution(options, [&](const std::vector<uint32_t>& pick) {
                StateSet s_hat, o_src;
                for (size_t i = 0; i < S.size(); ++i) {
                    const Clause& c = options[i][pick[i]];
                    s_hat.insert(s_hat.end(), c.begin(), c.end());
                    if (O.empty() || std::binary_search(O.begin(), O.end(), S[i]))
                        o_src.insert(o_src.end(), c.begin(), c.end());
                }
                std::sort(s_hat.begin(), s_hat.end());
                s_hat.erase(std::unique(s_hat.begin(), s_hat.end()), s_hat.end());
                std::sort(o_src.begin(), o_src.end());
                o_src.erase(std::unique(o_src.begin(), o_src.end()), o_src.end());
                StateSet o_hat;
                for (StateId q : o_src)
                    if (owes(q)) o_hat.push_back(q);
                targets.insert({std::move(s_hat), std::move(o_hat)});
            });
            std::vector<Cond> ops;
            for (const BpState& t : targets) ops.push_back(Cond::leaf(intern(t)));
            conds.push_back(Cond::disj(std::move(ops)));
        }
    }

    Automaton nbw;
    nbw.name = (a.name.empty() ? "aut" : a.name) + "_bp";
    nbw.alphabet = dnf.alphabet;
    nbw.states.resize(list.size());
    for (size_t i = 0; i < list.size(); ++i)
        nbw.states[i] = sanitize_identifier(set_name(list[i].first, dnf.states) + "_" +
                                            set_name(list[i].second, dnf.states));
    nbw.states = unique_names(std::move(nbw.states));
    nbw.initial = init;
    nbw.delta = std::move(conds);
    std::vector<StateId> acc;
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i].second.empty()) acc.push_back((StateId)i);
    nbw.acceptance = Acceptance::buchi(std::move(acc));

    size_t bound = 1;
    for (size_t i = 0; i < n; ++i) bound *= 3;
    assert(nbw.num_states() <= bound);
    (void)bound;
    require_valid(nbw);
    return nbw;
}

namespace {

/// Reachable powerset automaton; `universal_flavour` collects
/// conjunctive obligations (accept iff all final) instead of
/// disjunctive alternatives (accept iff some final).
Automaton powerset_finite(const Automaton& a, bool universal_flavour,
                          const char* name_suffix) {
    if (a.acceptance.kind != AccKind::FiniteWords)
        throw Error("powerset construction needs finite-word acceptance");
    Automaton dnf = normalize(a, NormalForm::Dnf);
    require_valid(dnf);

    std::map<StateSet, StateId> ids;
    std::vector<StateSet> list;
    auto intern = [&](StateSet s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        StateId id = (StateId)list.size();
        ids.emplace(s, id);
        list.push_back(std::move(s));
        return id;
    };
    StateId init = intern({dnf.initial});

    std::vector<std::optional<Cond>> conds;
    for (size_t done = 0; done < list.size(); ++done) {
        for (LetterId x = 0; x < dnf.num_letters(); ++x) {
            const StateSet S = list[done];
            if (universal_flavour) {
                // one successor per joint resolution of the nondeterminism
                std::vector<ClauseList> options;
                for (StateId q : S) options.push_back(dnf_shape_clauses(dnf.cond(q, x)));
                std::set<StateSet> targets;
                for_each_resolution(options, [&](const std::vector<uint32_t>& pick) {
                    StateSet t;
                    for (size_t i = 0; i < S.size(); ++i) {
                        const Clause& c = options[i][pick[i]];
                        t.insert(t.end(), c.begin(), c.end());
                    }
                    std::sort(t.begin(), t.end());
                    t.erase(std::unique(t.begin(), t.end()), t.end());
                    targets.insert(std::move(t));
                });
                std::vector<Cond> ops;
                for (const StateSet& t : targets) ops.push_back(Cond::leaf(intern(t)));
                conds.push_back(Cond::disj(std::move(ops)));
            } else {
                // classic subset step over purely disjunctive conditions
                StateSet t;
                for (StateId q : S) {
                    for (const Clause& c : dnf_shape_clauses(dnf.cond(q, x))) {
                        if (c.size() != 1)
                            throw Error("subset construction needs a nondeterministic automaton");
                        t.push_back(c.front());
                    }
                }
                std::sort(t.begin(), t.end());
                t.erase(std::unique(t.begin(), t.end()), t.end());
                conds.push_back(Cond::leaf(intern(std::move(t))));
            }
        }
    }

    Automaton out;
    out.name = (a.name.empty() ? "aut" : a.name) + name_suffix;
    out.alphabet = dnf.alphabet;
    out.states.resize(list.size());
    for (size_t i = 0; i < list.size(); ++i)
        out.states[i] = sanitize_identifier(set_name(list[i], dnf.states));
    out.states = unique_names(std::move(out.states));
    out.initial = init;
    out.delta = std::move(conds);
    std::vector<StateId> fin;
    for (size_t i = 0; i < list.size(); ++i) {
        bool ok;
        if (universal_flavour) {
            ok = true;
            for (StateId q : list[i]) ok = ok && dnf.acceptance.in_set(q);
        } else {
            ok = false;
            for (StateId q : list[i]) ok = ok || dnf.acceptance.in_set(q);
        }
        if (ok) fin.push_back((StateId)i);
    }
    out.acceptance = Acceptance::finite_words(std::move(fin));
    require_valid(out);
    return out;
}

} // namespace

Automaton subset_construction(const Automaton& a) {
    Automaton out = powerset_finite(a, false, "_det");
    assert(out.num_states() <= ((size_t)1 << std::min<size_t>(a.num_states(), 60)));
    return out;
}

Automaton finite_alternation_removal(const Automaton& a) {
    Automaton nfa = powerset_finite(a, true, "_nd");
    return nfa;
}

Automaton hopcroft_minimize(const Automaton& dfa) {
    if (dfa.acceptance.kind != AccKind::FiniteWords)
        throw Error("hopcroft_minimize needs finite-word acceptance");
    if (!is_deterministic(dfa)) throw Error("hopcroft_minimize needs a deterministic automaton");
    require_valid(dfa);

    // reachable restriction
    std::vector<int64_t> reach_id(dfa.num_states(), -1);
    std::vector<StateId> reach;
    reach.push_back(dfa.initial);
    reach_id[dfa.initial] = 0;
    for (size_t i = 0; i < reach.size(); ++i)
        for (LetterId x = 0; x < dfa.num_letters(); ++x) {
            StateId t = dfa.cond(reach[i], x).state();
            if (reach_id[t] < 0) {
                reach_id[t] = (int64_t)reach.size();
                reach.push_back(t);
            }
        }
    const size_t n = reach.size();
    const size_t L = dfa.num_letters();
    std::vector<StateId> step(n * L);
    for (size_t i = 0; i < n; ++i)
        for (LetterId x = 0; x < L; ++x)
            step[i * L + x] = (StateId)reach_id[dfa.cond(reach[i], x).state()];

    // Hopcroft partition refinement
    std::vector<uint32_t> block(n, 0);
    std::vector<std::vector<StateId>> blocks(2);
    for (size_t i = 0; i < n; ++i) {
        bool fin = dfa.acceptance.in_set(reach[i]);
        block[i] = fin ? 1 : 0;
        blocks[fin ? 1 : 0].push_back((StateId)i);
    }
    if (blocks[0].empty() || blocks[1].empty()) {
        uint32_t keep = blocks[0].empty() ? 1 : 0;
        blocks = {blocks[keep]};
        for (size_t i = 0; i < n; ++i) block[i] = 0;
    }
    std::vector<std::vector<StateId>> pred(n * L);
    for (size_t i = 0; i < n; ++i)
        for (LetterId x = 0; x < L; ++x) pred[step[i * L + x] * L + x].push_back((StateId)i);

    std::set<std::pair<uint32_t, LetterId>> worklist;
    for (uint32_t b = 0; b < blocks.size(); ++b)
        for (LetterId x = 0; x < L; ++x) worklist.insert({b, x});
    while (!worklist.empty()) {
        auto [sb, x] = *worklist.begin();
        worklist.erase(worklist.begin());
        // states with an x-edge into block sb
        std::vector<StateId> movers;
        for (StateId t : blocks[sb]) {
            const auto& ps = pred[(size_t)t * L + x];
            movers.insert(movers.end(), ps.begin(), ps.end());
        }
        std::sort(movers.begin(), movers.end());
        movers.erase(std::unique(movers.begin(), movers.end()), movers.end());
        std::map<uint32_t, std::vector<StateId>> touched;
        for (StateId s : movers) touched[block[s]].push_back(s);
        for (auto& [b, inset] : touched) {
            if (inset.size() == blocks[b].size()) continue;
            uint32_t nb = (uint32_t)blocks.size();
            std::vector<StateId> stay;
            std::set<StateId> in(inset.begin(), inset.end());
            for (StateId s : blocks[b])
                if (!in.count(s)) stay.push_back(s);
            blocks[b] = stay;
            blocks.push_back(inset);
            for (StateId s : inset) block[s] = nb;
            for (LetterId y = 0; y < L; ++y) {
                if (worklist.count({b, y})) {
                    worklist.insert({nb, y});
                } else {
                    // split on the smaller half
                    worklist.insert(blocks[b].size() <= blocks[nb].size()
                                        ? std::make_pair(b, y)
                                        : std::make_pair(nb, y));
                }
            }
        }
    }

    Automaton min;
    min.name = dfa.name + "_min";
    min.alphabet = dfa.alphabet;
    min.states.resize(blocks.size());
    for (uint32_t b = 0; b < blocks.size(); ++b)
        min.states[b] = "c" + std::to_string(b) + "_" + dfa.states[reach[blocks[b].front()]];
    min.states = unique_names(std::move(min.states));
    min.initial = block[0]; // reach[0] is the initial state
    min.resize_delta();
    for (uint32_t b = 0; b < blocks.size(); ++b)
        for (LetterId x = 0; x < L; ++x)
            min.set_cond(b, x, Cond::leaf(block[step[(size_t)blocks[b].front() * L + x]]));
    std::vector<StateId> fin;
    for (uint32_t b = 0; b < blocks.size(); ++b)
        if (dfa.acceptance.in_set(reach[blocks[b].front()])) fin.push_back(b);
    min.acceptance = Acceptance::finite_words(std::move(fin));
    require_valid(min);
    return min;
}

size_t dfa_residual_classes(const Automaton& dfa) {
    if (!is_deterministic(dfa) || dfa.acceptance.kind != AccKind::FiniteWords)
        throw Error("dfa_residual_classes needs a complete DFA");
    // Moore refinement over the reachable part.
    std::vector<int64_t> reach_id(dfa.num_states(), -1);
    std::vector<StateId> reach{dfa.initial};
    reach_id[dfa.initial] = 0;
    for (size_t i = 0; i < reach.size(); ++i)
        for (LetterId x = 0; x < dfa.num_letters(); ++x) {
            StateId t = dfa.cond(reach[i], x).state();
            if (reach_id[t] < 0) {
                reach_id[t] = (int64_t)reach.size();
                reach.push_back(t);
            }
        }
    const size_t n = reach.size();
    std::vector<uint32_t> cls(n);
    for (size_t i = 0; i < n; ++i) cls[i] = dfa.acceptance.in_set(reach[i]) ? 1 : 0;
    while (true) {
        std::map<std::vector<uint32_t>, uint32_t> sig_ids;
        std::vector<uint32_t> next(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<uint32_t> sig{cls[i]};
            for (LetterId x = 0; x < dfa.num_letters(); ++x)
                sig.push_back(cls[reach_id[dfa.cond(reach[i], x).state()]]);
            auto it = sig_ids.find(sig);
            if (it == sig_ids.end()) it = sig_ids.emplace(sig, (uint32_t)sig_ids.size()).first;
            next[i] = it->second;
        }
        size_t old_count = std::set<uint32_t>(cls.begin(), cls.end()).size();
        cls = std::move(next);
        if (sig_ids.size() == old_count) break;
    }
    return std::set<uint32_t>(cls.begin(), cls.end()).size();
}

Automaton gfg_acw_to_dcw(const Automaton& a, const Automaton& d_ref) {
    if (a.acceptance.kind != AccKind::CoBuchi)
        throw Error("gfg_acw_to_dcw needs a co-Buchi automaton");
    // The input must be GFG; a failing letter game is reported with its
    // counter strategy.
    GfgVerdict v = is_gfg(a, d_ref);
    if (!v.gfg()) throw NotGfg(std::move(v));

    Automaton abw = dualize(a);              // GFG ABW for the complement
    Automaton dual_ref = dualize(d_ref);     // deterministic reference for it
    Automaton nbw = breakpoint(abw);         // GFGness preserved
    auto [m_e, m_a] = extract_hd_transducers(nbw, dual_ref);
    Automaton dbw = determinize_gfg(normalize(nbw, NormalForm::Dnf), m_e, m_a);
    Automaton dcw = dualize(dbw);
    dcw.name = (a.name.empty() ? "aut" : a.name) + "_dcw";

    size_t bound = 1;
    for (size_t i = 0; i < a.num_states(); ++i) bound *= 3;
    bound *= m_e.memory_count() * m_a.memory_count();
    assert(dcw.num_states() <= bound);
    (void)bound;
    return dcw;
}

} // namespace gfgaut
