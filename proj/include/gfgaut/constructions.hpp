/* constructions.hpp -- alternation and nondeterminism removal */

#pragma once

#include "gfgaut/automaton.hpp"

namespace gfgaut {

/// Breakpoint translation of an alternating Buchi automaton into an
/// equivalent nondeterministic one over <S, O> pairs, O tracking the
/// states that owe a visit to the accepting set. Accepting states are
/// the breakpoints <S, {}>; at most 3^n states are reachable.
Automaton breakpoint(const Automaton& a);

/// Reachable subset automaton of a nondeterministic finite-word automaton.
Automaton subset_construction(const Automaton& a);

/// Alternation removal for finite words: nondeterministic automaton
/// over conjunctive obligations (sets of states), accepting when the
/// whole obligation is final.
Automaton finite_alternation_removal(const Automaton& a);

/// Hopcroft minimization of a complete deterministic finite-word
/// automaton, restricted to its reachable part.
Automaton hopcroft_minimize(const Automaton& dfa);

/// Number of distinct residual languages of a deterministic finite-word
/// automaton (Moore partition refinement; cross-checks Hopcroft).
size_t dfa_residual_classes(const Automaton& dfa);

/// The four-step determinization of a GFG alternating co-Buchi
/// automaton: dualize, breakpoint, determinize through the extracted
/// witnesses of the resulting GFG NBW, dualize back.
Automaton gfg_acw_to_dcw(const Automaton& a, const Automaton& d_ref);

} // namespace gfgaut
