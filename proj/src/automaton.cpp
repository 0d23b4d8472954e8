/* automaton.cpp -- automaton invariants, classification, dualize/normalize/residual */

#include "gfgaut/automaton.hpp"

#include <algorithm>

namespace gfgaut {

Acceptance Acceptance::finite_words(std::vector<StateId> f) {
    Acceptance a;
    a.kind = AccKind::FiniteWords;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    a.set = std::move(f);
    return a;
}

Acceptance Acceptance::weak(std::vector<StateId> f) {
    Acceptance a = buchi(std::move(f));
    a.kind = AccKind::Weak;
    return a;
}

Acceptance Acceptance::buchi(std::vector<StateId> f) {
    Acceptance a;
    a.kind = AccKind::Buchi;
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    a.set = std::move(f);
    return a;
}

Acceptance Acceptance::co_buchi(std::vector<StateId> r) {
    Acceptance a;
    a.kind = AccKind::CoBuchi;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    a.set = std::move(r);
    return a;
}

Acceptance Acceptance::parity(std::vector<int> priorities) {
    Acceptance a;
    a.kind = AccKind::Parity;
    a.priority = std::move(priorities);
    return a;
}

Acceptance Acceptance::state_labels(std::vector<std::string> labels) {
    Acceptance a;
    a.kind = AccKind::Labels;
    a.labels = std::move(labels);
    return a;
}

bool Acceptance::in_set(StateId q) const {
    return std::binary_search(set.begin(), set.end(), q);
}

bool Acceptance::is_parity_like() const {
    switch (kind) {
    case AccKind::Weak:
    case AccKind::Buchi:
    case AccKind::CoBuchi:
    case AccKind::Parity: return true;
    default: return false;
    }
}

int Acceptance::parity_priority(StateId q) const {
    switch (kind) {
    case AccKind::Weak:
    case AccKind::Buchi: return in_set(q) ? 2 : 1;
    case AccKind::CoBuchi: return in_set(q) ? 1 : 0;
    case AccKind::Parity:
        if (q >= priority.size()) throw Error("parity priority missing for state");
        return priority[q];
    default: throw Error("acceptance kind has no parity encoding");
    }
}

int Acceptance::max_parity_priority(size_t num_states) const {
    int m = 0;
    for (StateId q = 0; q < num_states; ++q) m = std::max(m, parity_priority(q));
    return m;
}

void Automaton::set_cond(StateId q, LetterId a, Cond c) {
    if (delta.size() != states.size() * alphabet.size()) resize_delta();
    delta[q * alphabet.size() + a] = std::move(c);
}

bool Automaton::has_cond(StateId q, LetterId a) const {
    size_t i = q * alphabet.size() + a;
    return i < delta.size() && delta[i].has_value();
}

const Cond& Automaton::cond(StateId q, LetterId a) const {
    size_t i = q * alphabet.size() + a;
    if (i >= delta.size() || !delta[i].has_value())
        throw Error("missing transition for state " + states[q] + " on letter " + alphabet[a]);
    return *delta[i];
}

std::optional<StateId> Automaton::state_index(const std::string& n) const {
    for (StateId i = 0; i < states.size(); ++i)
        if (states[i] == n) return i;
    return std::nullopt;
}

std::optional<LetterId> Automaton::letter_index(const std::string& n) const {
    for (LetterId i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == n) return i;
    return std::nullopt;
}

std::string cond_to_string(const Cond& c, const std::vector<std::string>& state_names) {
    auto name = [&](StateId q) {
        return q < state_names.size() ? state_names[q] : "?" + std::to_string(q);
    };
    switch (c.kind()) {
    case CondKind::Leaf: return name(c.state());
    case CondKind::And: {
        std::string s;
        for (size_t i = 0; i < c.operands().size(); ++i) {
            if (i) s += " & ";
            const Cond& op = c.operands()[i];
            if (op.kind() == CondKind::Or)
                s += "(" + cond_to_string(op, state_names) + ")";
            else
                s += cond_to_string(op, state_names);
        }
        return s;
    }
    case CondKind::Or: {
        std::string s;
        for (size_t i = 0; i < c.operands().size(); ++i) {
            if (i) s += " | ";
            s += cond_to_string(c.operands()[i], state_names);
        }
        return s;
    }
    }
    return "?";
}

std::string sanitize_identifier(const std::string& s) {
    std::string out;
    for (char ch : s) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                  (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == '-';
        out += ok ? ch : '_';
    }
    if (out.empty()) out = "_";
    return out;
}

std::vector<std::string> unique_names(std::vector<std::string> names) {
    std::vector<std::string> out;
    out.reserve(names.size());
    std::vector<std::string> taken;
    for (auto& n : names) {
        std::string candidate = n;
        int suffix = 1;
        while (std::find(taken.begin(), taken.end(), candidate) != taken.end())
            candidate = n + "_" + std::to_string(++suffix);
        taken.push_back(candidate);
        out.push_back(candidate);
    }
    return out;
}

SccInfo transition_sccs(const Automaton& a) {
    const size_t n = a.num_states();
    std::vector<std::vector<StateId>> succ(n);
    for (StateId q = 0; q < n; ++q) {
        std::vector<StateId> out;
        for (LetterId x = 0; x < a.num_letters(); ++x) {
            if (!a.has_cond(q, x)) continue;
            a.cond(q, x).for_each_state([&](StateId t) { out.push_back(t); });
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        succ[q] = std::move(out);
    }

    // Iterative Tarjan.
    SccInfo info;
    info.component_of.assign(n, UINT32_MAX);
    std::vector<uint32_t> index(n, UINT32_MAX), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    uint32_t next = 0;
    struct Frame {
        StateId v;
        size_t child;
    };
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != UINT32_MAX) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < succ[f.v].size()) {
                StateId w = succ[f.v][f.child++];
                if (w >= n) continue; // out-of-scope leaf, reported by validate
                if (index[w] == UINT32_MAX) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<StateId> comp;
                    StateId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        info.component_of[w] = (uint32_t)info.components.size();
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    info.components.push_back(std::move(comp));
                }
                StateId v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    info.nontrivial.assign(info.components.size(), false);
    for (size_t c = 0; c < info.components.size(); ++c) {
        for (StateId q : info.components[c]) {
            for (StateId t : succ[q]) {
                if (t < n && info.component_of[t] == c) info.nontrivial[c] = true;
            }
        }
    }
    return info;
}

std::vector<Violation> validate(const Automaton& a) {
    std::vector<Violation> out;
    if (a.alphabet.empty()) out.push_back({Violation::Code::EmptyAlphabet, "alphabet is empty"});
    if (a.states.empty()) out.push_back({Violation::Code::EmptyStates, "state set is empty"});
    if (a.initial >= a.states.size())
        out.push_back({Violation::Code::InitialScope, "initial state out of scope"});
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (LetterId x = 0; x < a.num_letters(); ++x) {
            if (!a.has_cond(q, x)) {
                out.push_back({Violation::Code::MissingTransition,
                               "missing delta " + a.states[q] + " " + a.alphabet[x]});
                continue;
            }
            a.cond(q, x).for_each_state([&](StateId t) {
                if (t >= a.num_states())
                    out.push_back({Violation::Code::LeafScope,
                                   "condition of " + a.states[q] + " on " + a.alphabet[x] +
                                       " references an unknown state"});
            });
        }
    }
    switch (a.acceptance.kind) {
    case AccKind::FiniteWords:
    case AccKind::Weak:
    case AccKind::Buchi:
    case AccKind::CoBuchi:
        for (StateId q : a.acceptance.set)
            if (q >= a.num_states())
                out.push_back({Violation::Code::AcceptanceScope, "acceptance set out of scope"});
        break;
    case AccKind::Parity:
        if (a.acceptance.priority.size() != a.num_states())
            out.push_back({Violation::Code::AcceptanceScope, "parity map does not cover all states"});
        else
            for (int p : a.acceptance.priority)
                if (p < 0)
                    out.push_back({Violation::Code::AcceptanceScope, "negative priority"});
        break;
    case AccKind::Labels:
        if (a.acceptance.labels.size() != a.num_states())
            out.push_back({Violation::Code::AcceptanceScope, "label map does not cover all states"});
        break;
    }
    if (a.acceptance.kind == AccKind::Weak &&
        std::none_of(out.begin(), out.end(), [](const Violation& v) {
            return v.code == Violation::Code::MissingTransition ||
                   v.code == Violation::Code::LeafScope;
        })) {
        SccInfo sccs = transition_sccs(a);
        for (const auto& comp : sccs.components) {
            bool has_acc = false, has_rej = false;
            for (StateId q : comp) (a.acceptance.in_set(q) ? has_acc : has_rej) = true;
            if (has_acc && has_rej)
                out.push_back({Violation::Code::WeakHomogeneity,
                               "SCC containing " + a.states[comp.front()] +
                                   " mixes accepting and rejecting states"});
        }
    }
    return out;
}

void require_valid(const Automaton& a) {
    auto violations = validate(a);
    if (!violations.empty()) throw Error("invalid automaton: " + violations.front().detail);
}

TransitionMode classify(const Automaton& a) {
    bool has_and = false, has_or = false;
    for (const auto& c : a.delta) {
        if (!c) continue;
        has_and = has_and || c->contains_and();
        has_or = has_or || c->contains_or();
    }
    if (!has_and && !has_or) return TransitionMode::Deterministic;
    if (!has_and) return TransitionMode::Nondeterministic;
    if (!has_or) return TransitionMode::Universal;
    return TransitionMode::Alternating;
}

bool is_deterministic(const Automaton& a) { return classify(a) == TransitionMode::Deterministic; }

Automaton dualize(const Automaton& a) {
    Automaton d = a;
    d.name = a.name.empty() ? "" : a.name + "_dual";
    for (auto& c : d.delta)
        if (c) c = c->dual();
    switch (a.acceptance.kind) {
    case AccKind::Buchi: d.acceptance.kind = AccKind::CoBuchi; break;
    case AccKind::CoBuchi: d.acceptance.kind = AccKind::Buchi; break;
    case AccKind::Weak: {
        std::vector<StateId> comp;
        for (StateId q = 0; q < a.num_states(); ++q)
            if (!a.acceptance.in_set(q)) comp.push_back(q);
        d.acceptance = Acceptance::weak(std::move(comp));
        break;
    }
    case AccKind::Parity:
        for (auto& p : d.acceptance.priority) ++p;
        break;
    case AccKind::FiniteWords: throw Error("dualize: finite-word acceptance not supported");
    case AccKind::Labels: throw Error("dualize: label acceptance has no dual");
    }
    return d;
}

Automaton normalize(const Automaton& a, NormalForm form) {
    Automaton n = a;
    for (auto& c : n.delta) {
        if (!c) continue;
        c = form == NormalForm::Dnf ? cond_from_dnf(to_dnf_clauses(*c))
                                    : cond_from_cnf(to_cnf_clauses(*c));
    }
    return n;
}

Automaton residual(const Automaton& a, StateId q) {
    if (q >= a.num_states()) throw Error("residual: unknown state");
    Automaton r = a;
    r.initial = q;
    return r;
}

} // namespace gfgaut
