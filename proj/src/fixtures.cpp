/* fixtures.cpp */

#include "gfgaut/fixtures.hpp"

#include <algorithm>

namespace gfgaut {
namespace fixtures {

namespace {

Automaton skeleton(std::string name, std::vector<std::string> alphabet,
                   std::vector<std::string> states, const std::string& initial) {
    Automaton a;
    a.name = std::move(name);
    a.alphabet = std::move(alphabet);
    a.states = std::move(states);
    a.initial = *a.state_index(initial);
    a.resize_delta();
    return a;
}

StateId st(const Automaton& a, const std::string& name) { return *a.state_index(name); }

void d(Automaton& a, const std::string& q, const std::string& x, Cond c) {
    a.set_cond(st(a, q), *a.letter_index(x), std::move(c));
}

Cond L(const Automaton& a, const std::string& q) { return Cond::leaf(st(a, q)); }

} // namespace

Automaton f1() {
    Automaton a = skeleton("f1", {"a", "b"}, {"s"}, "s");
    d(a, "s", "a", L(a, "s"));
    d(a, "s", "b", L(a, "s"));
    a.acceptance = Acceptance::buchi({st(a, "s")});
    return a;
}

Automaton f2() {
    Automaton a = skeleton("f2", {"a", "b"}, {"q0", "qa", "qb", "r"}, "q0");
    Cond guess = Cond::disj({L(a, "q0"), L(a, "qa"), L(a, "qb")});
    d(a, "q0", "a", guess);
    d(a, "q0", "b", guess);
    d(a, "qa", "a", L(a, "qa"));
    d(a, "qa", "b", L(a, "r"));
    d(a, "qb", "b", L(a, "qb"));
    d(a, "qb", "a", L(a, "r"));
    d(a, "r", "a", L(a, "r"));
    d(a, "r", "b", L(a, "r"));
    a.acceptance = Acceptance::buchi({st(a, "qa"), st(a, "qb")});
    return a;
}

Automaton d2() {
    Automaton a =
        skeleton("d2", {"a", "b"}, {"a_stale", "a_fresh", "b_stale", "b_fresh"}, "a_stale");
    for (const char* s : {"a_stale", "a_fresh"}) {
        d(a, s, "a", L(a, "a_stale"));
        d(a, s, "b", L(a, "b_fresh"));
    }
    for (const char* s : {"b_stale", "b_fresh"}) {
        d(a, s, "b", L(a, "b_stale"));
        d(a, s, "a", L(a, "a_fresh"));
    }
    a.acceptance = Acceptance::co_buchi({st(a, "a_fresh"), st(a, "b_fresh")});
    return a;
}

Automaton f3() {
    Automaton a = skeleton("f3", {"a"}, {"p", "q"}, "p");
    Cond both = Cond::disj({L(a, "p"), L(a, "q")});
    d(a, "p", "a", both);
    d(a, "q", "a", both);
    a.acceptance = Acceptance::buchi({st(a, "p"), st(a, "q")});
    return a;
}

Automaton d3() {
    Automaton a = skeleton("d3", {"a"}, {"t"}, "t");
    d(a, "t", "a", L(a, "t"));
    a.acceptance = Acceptance::buchi({st(a, "t")});
    return a;
}

Automaton f4() {
    Automaton a = dualize(f2());
    a.name = "f4";
    return a;
}

Automaton d4() {
    Automaton a = dualize(d2());
    a.name = "d4";
    return a;
}

Automaton abw_conjunction() {
    Automaton a = skeleton("abw_conj", {"a", "b"}, {"q0", "q1", "q2"}, "q0");
    d(a, "q0", "a", Cond::conj({L(a, "q1"), L(a, "q2")}));
    d(a, "q0", "b", L(a, "q0"));
    for (const char* s : {"q1", "q2"}) {
        d(a, s, "a", L(a, s));
        d(a, s, "b", L(a, s));
    }
    a.acceptance = Acceptance::buchi({st(a, "q1"), st(a, "q2")});
    return a;
}

Automaton abw_conjunction_ref() {
    Automaton a = skeleton("abw_conj_ref", {"a", "b"}, {"u", "v"}, "u");
    d(a, "u", "a", L(a, "v"));
    d(a, "u", "b", L(a, "u"));
    d(a, "v", "a", L(a, "v"));
    d(a, "v", "b", L(a, "v"));
    a.acceptance = Acceptance::buchi({st(a, "v")});
    return a;
}

Automaton gfg_abw() {
    // infinitely many a's, with a duplicated accepting state and a
    // conjunction against an all-accepting sink
    Automaton a = skeleton("gfg_abw", {"a", "b"}, {"u", "v", "v2", "w"}, "u");
    Cond vs = Cond::disj({L(a, "v"), L(a, "v2")});
    d(a, "u", "a", vs);
    d(a, "u", "b", Cond::conj({L(a, "u"), L(a, "w")}));
    d(a, "v", "a", vs);
    d(a, "v", "b", L(a, "u"));
    d(a, "v2", "a", vs);
    d(a, "v2", "b", L(a, "u"));
    d(a, "w", "a", L(a, "w"));
    d(a, "w", "b", L(a, "w"));
    a.acceptance = Acceptance::buchi({st(a, "v"), st(a, "v2"), st(a, "w")});
    return a;
}

Automaton gfg_abw_ref() {
    Automaton a = skeleton("gfg_abw_ref", {"a", "b"}, {"u", "v"}, "u");
    d(a, "u", "a", L(a, "v"));
    d(a, "u", "b", L(a, "u"));
    d(a, "v", "a", L(a, "v"));
    d(a, "v", "b", L(a, "u"));
    a.acceptance = Acceptance::buchi({st(a, "v")});
    return a;
}

Automaton gfg_acw() {
    Automaton a = dualize(gfg_abw());
    a.name = "gfg_acw";
    return a;
}

Automaton gfg_acw_ref() {
    Automaton a = dualize(gfg_abw_ref());
    a.name = "gfg_acw_ref";
    return a;
}

Automaton dcw_fin_b() {
    Automaton a = skeleton("dcw_fin_b", {"a", "b"}, {"p", "r"}, "p");
    d(a, "p", "a", L(a, "p"));
    d(a, "p", "b", L(a, "r"));
    d(a, "r", "a", L(a, "p"));
    d(a, "r", "b", L(a, "r"));
    a.acceptance = Acceptance::co_buchi({st(a, "r")});
    return a;
}

Automaton cycle_dfa(uint32_t n) {
    std::vector<std::string> states;
    for (uint32_t i = 0; i < n; ++i) states.push_back("c" + std::to_string(i));
    Automaton a = skeleton("cycle" + std::to_string(n), {"a", "b"}, states, "c0");
    for (uint32_t i = 0; i < n; ++i) {
        a.set_cond(i, *a.letter_index("a"), Cond::leaf((i + 1) % n));
        a.set_cond(i, *a.letter_index("b"), Cond::leaf(i));
    }
    a.acceptance = Acceptance::finite_words({0});
    return a;
}

namespace {

/// Duplicates state `dup` of a deterministic automaton and widens every
/// transition into it to the disjunction of the twins.
Automaton duplicate_with_or(const Automaton& base, StateId dup, const std::string& name) {
    Automaton a = base;
    a.name = name;
    StateId twin = (StateId)a.states.size();
    a.states.push_back(a.states[dup] + "x");
    std::vector<std::optional<Cond>> delta(a.states.size() * a.num_letters());
    auto widen = [&](const Cond& c) {
        if (!c.is_leaf()) throw Error("duplicate_with_or needs a deterministic base");
        if (c.state() == dup) return Cond::disj({Cond::leaf(dup), Cond::leaf(twin)});
        return c;
    };
    for (StateId q = 0; q < base.num_states(); ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x)
            delta[q * a.num_letters() + x] = widen(base.cond(q, x));
    for (LetterId x = 0; x < a.num_letters(); ++x)
        delta[twin * a.num_letters() + x] = widen(base.cond(dup, x));
    a.delta = std::move(delta);
    std::vector<StateId> set = a.acceptance.set;
    if (a.acceptance.in_set(dup)) set.push_back(twin);
    Acceptance acc;
    acc.kind = a.acceptance.kind;
    std::sort(set.begin(), set.end());
    acc.set = std::move(set);
    a.acceptance = acc;
    return a;
}

} // namespace

Automaton redundant_or_nfa(uint32_t n) {
    if (n < 2) throw Error("redundant_or_nfa needs at least two states");
    return duplicate_with_or(cycle_dfa(n), 1, "ror" + std::to_string(n));
}

Automaton weak_cycle(uint32_t n) {
    std::vector<std::string> states;
    for (uint32_t i = 0; i < n; ++i) states.push_back("w" + std::to_string(i));
    Automaton a = skeleton("weak" + std::to_string(n), {"a", "b"}, states, "w0");
    for (uint32_t i = 0; i < n; ++i) {
        a.set_cond(i, *a.letter_index("a"), Cond::leaf(std::min(i + 1, n - 1)));
        a.set_cond(i, *a.letter_index("b"), Cond::leaf(i));
    }
    std::vector<StateId> acc;
    for (uint32_t i = 0; i < n; i += 2) acc.push_back(i);
    a.acceptance = Acceptance::weak(std::move(acc));
    return a;
}

Automaton redundant_or_weak(uint32_t n) {
    if (n < 2) throw Error("redundant_or_weak needs at least two states");
    return duplicate_with_or(weak_cycle(n), 1, "rorw" + std::to_string(n));
}

Automaton weak_all() {
    Automaton a = skeleton("weak_all", {"a", "b"}, {"s"}, "s");
    d(a, "s", "a", L(a, "s"));
    d(a, "s", "b", L(a, "s"));
    a.acceptance = Acceptance::weak({st(a, "s")});
    return a;
}

RandomPair random_obfuscated(std::mt19937_64& rng, uint32_t ref_states, uint32_t letters) {
    letters = std::max(1u, std::min(letters, 2u));
    ref_states = std::max(1u, ref_states);
    std::vector<std::string> alphabet{"a", "b"};
    alphabet.resize(letters);

    Automaton ref;
    ref.name = "rnd_ref";
    ref.alphabet = alphabet;
    for (uint32_t i = 0; i < ref_states; ++i) ref.states.push_back("d" + std::to_string(i));
    ref.initial = 0;
    ref.resize_delta();
    for (StateId q = 0; q < ref_states; ++q)
        for (LetterId x = 0; x < letters; ++x)
            ref.set_cond(q, x, Cond::leaf((StateId)(rng() % ref_states)));
    std::vector<StateId> set;
    for (StateId q = 0; q < ref_states; ++q)
        if (rng() % 2 == 0) set.push_back(q);
    ref.acceptance = rng() % 2 == 0 ? Acceptance::buchi(set) : Acceptance::co_buchi(set);

    // duplicate one or two states, widen transitions over the twins
    Automaton a = ref;
    a.name = "rnd_aut";
    uint32_t dups = 1 + (uint32_t)(rng() % 2);
    std::vector<int64_t> twin(ref_states, -1);
    for (uint32_t i = 0; i < dups; ++i) {
        StateId dup = (StateId)(rng() % ref_states);
        if (twin[dup] >= 0) continue;
        twin[dup] = (int64_t)a.states.size();
        a.states.push_back(a.states[dup] + "x");
    }
    auto widen = [&](StateId t) {
        if (twin[t] < 0) return Cond::leaf(t);
        switch (rng() % 4) {
        case 0: return Cond::leaf(t);
        case 1: return Cond::leaf((StateId)twin[t]);
        case 2: return Cond::disj({Cond::leaf(t), Cond::leaf((StateId)twin[t])});
        default: return Cond::conj({Cond::leaf(t), Cond::leaf((StateId)twin[t])});
        }
    };
    std::vector<std::optional<Cond>> delta(a.states.size() * letters);
    for (StateId q = 0; q < a.states.size(); ++q) {
        StateId orig = q < ref_states ? q : [&] {
            for (StateId o = 0; o < ref_states; ++o)
                if (twin[o] == (int64_t)q) return o;
            return (StateId)0;
        }();
        for (LetterId x = 0; x < letters; ++x)
            delta[q * letters + x] = widen(ref.cond(orig, x).state());
    }
    a.delta = std::move(delta);
    std::vector<StateId> aset = ref.acceptance.set;
    for (StateId o = 0; o < ref_states; ++o)
        if (twin[o] >= 0 && ref.acceptance.in_set(o)) aset.push_back((StateId)twin[o]);
    Acceptance acc;
    acc.kind = ref.acceptance.kind;
    std::sort(aset.begin(), aset.end());
    acc.set = std::move(aset);
    a.acceptance = acc;
    return {std::move(a), std::move(ref)};
}

namespace {

Cond random_cond(std::mt19937_64& rng, uint32_t states, int depth) {
    if (depth == 0 || rng() % 3 == 0) return Cond::leaf((StateId)(rng() % states));
    std::vector<Cond> ops;
    uint32_t k = 2 + (uint32_t)(rng() % 2);
    for (uint32_t i = 0; i < k; ++i) ops.push_back(random_cond(rng, states, depth - 1));
    return rng() % 2 == 0 ? Cond::disj(std::move(ops)) : Cond::conj(std::move(ops));
}

} // namespace

Automaton random_alternating(std::mt19937_64& rng, uint32_t states, uint32_t letters,
                             AccKind kind) {
    Automaton a;
    a.name = "rnd_alt";
    for (uint32_t x = 0; x < letters; ++x) a.alphabet.push_back(std::string(1, (char)('a' + x)));
    for (uint32_t i = 0; i < states; ++i) a.states.push_back("q" + std::to_string(i));
    a.initial = 0;
    a.resize_delta();
    for (StateId q = 0; q < states; ++q)
        for (LetterId x = 0; x < letters; ++x) a.set_cond(q, x, random_cond(rng, states, 2));
    std::vector<StateId> set;
    for (StateId q = 0; q < states; ++q)
        if (rng() % 2 == 0) set.push_back(q);
    switch (kind) {
    case AccKind::Buchi: a.acceptance = Acceptance::buchi(std::move(set)); break;
    case AccKind::CoBuchi: a.acceptance = Acceptance::co_buchi(std::move(set)); break;
    case AccKind::FiniteWords: a.acceptance = Acceptance::finite_words(std::move(set)); break;
    default: throw Error("random_alternating: unsupported kind");
    }
    return a;
}

Automaton random_nbw(std::mt19937_64& rng, uint32_t states, uint32_t letters) {
    Automaton a;
    a.name = "rnd_nbw";
    for (uint32_t x = 0; x < letters; ++x) a.alphabet.push_back(std::string(1, (char)('a' + x)));
    for (uint32_t i = 0; i < states; ++i) a.states.push_back("q" + std::to_string(i));
    a.initial = 0;
    a.resize_delta();
    for (StateId q = 0; q < states; ++q)
        for (LetterId x = 0; x < letters; ++x) {
            std::vector<Cond> ops;
            uint32_t k = 1 + (uint32_t)(rng() % 3);
            for (uint32_t i = 0; i < k; ++i) ops.push_back(Cond::leaf((StateId)(rng() % states)));
            a.set_cond(q, x, Cond::disj(std::move(ops)));
        }
    std::vector<StateId> set;
    for (StateId q = 0; q < states; ++q)
        if (rng() % 2 == 0) set.push_back(q);
    a.acceptance = Acceptance::buchi(std::move(set));
    return a;
}

Automaton random_labeled(std::mt19937_64& rng, uint32_t states,
                         const std::vector<std::string>& own_alphabet,
                         const std::vector<std::string>& label_alphabet) {
    Automaton a;
    a.name = "rnd_labeled";
    a.alphabet = own_alphabet;
    for (uint32_t i = 0; i < states; ++i) a.states.push_back("b" + std::to_string(i));
    a.initial = 0;
    a.resize_delta();
    for (StateId q = 0; q < states; ++q)
        for (LetterId x = 0; x < a.num_letters(); ++x) a.set_cond(q, x, random_cond(rng, states, 2));
    std::vector<std::string> labels(states);
    for (uint32_t i = 0; i < states; ++i)
        labels[i] = label_alphabet[rng() % label_alphabet.size()];
    a.acceptance = Acceptance::state_labels(std::move(labels));
    return a;
}

} // namespace fixtures
} // namespace gfgaut
