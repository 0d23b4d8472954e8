/* fixtures.hpp -- the named test corpus */

#pragma once

#include "gfgaut/automaton.hpp"

#include <random>

namespace gfgaut {
namespace fixtures {

/// Sigma = {a, b}, one accepting Buchi state with self-loops; L = Sigma^w.
Automaton f1();

/// NBW guessing whether the a's or the b's run out; states {q0, qa, qb, r},
/// accepting {qa, qb}. L = finitely many a's or finitely many b's.
/// The classic non-GFG automaton.
Automaton f2();

/// Deterministic co-Buchi reference for L(f2): tracks (last letter,
/// just switched?), rejects the two just-switched states; a word is
/// accepted iff it switches letters finitely often.
Automaton d2();

/// Sigma = {a}, two all-accepting Buchi states with delta = p|q. GFG.
Automaton f3();

/// One-state deterministic reference for L(f3) = {a^w}.
Automaton d3();

/// dualize(f2): universal co-Buchi, universality non-compliant.
Automaton f4();

/// dualize(d2): deterministic Buchi reference for the complement.
Automaton d4();

/// 3-state ABW with delta(q0,a)=q1&q2, q1/q2 looping and accepting;
/// L = words containing at least one a.
Automaton abw_conjunction();

/// Deterministic Buchi reference for abw_conjunction().
Automaton abw_conjunction_ref();

/// GFG alternating Buchi variant of f3 with a conjunctive layer:
/// delta(p,a) = (p|q) & (p|q) collapses, so this one mixes a genuine
/// conjunction of two accepting sinks with a disjunctive guess.
Automaton gfg_abw();
Automaton gfg_abw_ref();

/// GFG alternating co-Buchi fixture (dual of gfg_abw) and its reference.
Automaton gfg_acw();
Automaton gfg_acw_ref();

/// Deterministic co-Buchi automaton over {a,b}: rejects while reading b,
/// accepted iff finitely many b's. Used as a small DCW pipeline input.
Automaton dcw_fin_b();

/// Cycle DFA over {a,b} with n states: `a` advances the cycle, `b`
/// stays; accepting iff at state 0. Minimal for its language.
Automaton cycle_dfa(uint32_t n);

/// The redundant-Or family: cycle_dfa(n) with one state duplicated and
/// all transitions into it widened to an Or over the twins. GFG NFA
/// with n+1 states whose minimal DFA has n states.
Automaton redundant_or_nfa(uint32_t n);

/// Weak variants of the redundant-Or family (omega semantics).
Automaton weak_cycle(uint32_t n);
Automaton redundant_or_weak(uint32_t n);

/// One-state all-accepting weak automaton.
Automaton weak_all();

/// A random deterministic parity-like automaton and a language-equal
/// alternating obfuscation of it (state duplication + And/Or widening).
/// The pair is exactly equivalent by construction; callers still, by
/// contract, run reference_check on it.
struct RandomPair {
    Automaton aut;
    Automaton ref;
};
RandomPair random_obfuscated(std::mt19937_64& rng, uint32_t ref_states, uint32_t letters);

/// A random alternating automaton (arbitrary language), for structural
/// property tests that need no reference.
Automaton random_alternating(std::mt19937_64& rng, uint32_t states, uint32_t letters,
                             AccKind kind);

/// Random nondeterministic Buchi automaton.
Automaton random_nbw(std::mt19937_64& rng, uint32_t states, uint32_t letters);

/// Random state-labeled alternating automaton (outer input of compose).
Automaton random_labeled(std::mt19937_64& rng, uint32_t states,
                         const std::vector<std::string>& own_alphabet,
                         const std::vector<std::string>& label_alphabet);

} // namespace fixtures
} // namespace gfgaut
