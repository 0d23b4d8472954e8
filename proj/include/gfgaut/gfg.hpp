/* gfg.hpp -- GFG decision, HD transducer extraction, determinization, residual checks */

#pragma once

#include "gfgaut/letter_game.hpp"
#include "gfgaut/lasso.hpp"

namespace gfgaut {

struct GfgVerdict {
    bool nondeterminism_compliant = false;
    bool universality_compliant = false;
    bool gfg() const { return nondeterminism_compliant && universality_compliant; }
    /// Compliant sides carry the history-determinism witness; failing
    /// sides the opponent's letter-emitting counter strategy.
    std::optional<Transducer> eve_witness;
    std::optional<Transducer> adam_witness;
    std::optional<Transducer> adam_counter;
    std::optional<Transducer> eve_counter;
};

struct NotGfg : Error {
    explicit NotGfg(GfgVerdict v)
        : Error("automaton is not good for games"), verdict(std::move(v)) {}
    GfgVerdict verdict;
};

/// Decides compliance with both letter games relative to the supplied
/// deterministic reference. Exact relative to the reference; validate
/// it with reference_check beforehand.
GfgVerdict is_gfg(const Automaton& a, const Automaton& d_ref);

/// The two strategy transducers of a GFG automaton, over its DNF form:
/// M_E consumes letters and Adam's conjunct picks and outputs clauses
/// (or epsilon), M_A consumes (letter, clause) pairs and outputs states.
/// Throws NotGfg carrying the counter strategy otherwise.
std::pair<Transducer, Transducer> extract_hd_transducers(const Automaton& a,
                                                         const Automaton& d_ref);

/// Deterministic product of the automaton with its two witnesses:
/// states (q, x, y), transitions by
///   x' = rho_A(x, (a, chi_E(rho_E(y, a)))), q' = chi_A(x'),
///   y' = rho_E(rho_E(y, a), q'),
/// acceptance lifted from the automaton (same kind and index). Forced
/// moves (single clause / singleton clause) bypass the output consult,
/// so trivial witnesses of choice-free automata work unchanged.
Automaton determinize_gfg(const Automaton& a, const Transducer& m_e, const Transducer& m_a);

struct ResidualReport {
    size_t automaton_states = 0;
    size_t residual_classes = 0;
    size_t minimal_deterministic_size = 0;
    bool pass = false;
};

/// Size check for finite-word and weak GFG automata: the
/// witness product is determinized and minimized (Hopcroft for finite
/// words, residual-language quotient for weak); passes iff the minimal
/// size does not exceed the automaton's state count.
ResidualReport residual_check(const Automaton& a, const Transducer& m_e, const Transducer& m_a);

/// Reference-driven wrapper: weak automata get their witnesses from the
/// letter games; finite-word automata from a bounded search over
/// positional resolutions, validated against the reference before use.
ResidualReport residual_check_with_reference(const Automaton& a, const Automaton& d_ref);

/// Builds state-tracking witnesses from a per-(state, letter) clause
/// chooser and per-clause state chooser. Valid witnesses whenever the
/// resolution they encode is history-free and language-preserving;
/// useful for deterministic automata and hand-built GFG families.
std::pair<Transducer, Transducer> uniform_witnesses(
    const Automaton& a_dnf,
    const std::function<uint32_t(StateId, LetterId, const ClauseList&)>& pick_clause,
    const std::function<StateId(StateId, LetterId, const Clause&)>& pick_state);

/// Model-checking game over the DNF three-layer structure with one
/// player's moves fixed by a transducer: side Eve replays an M_E-shaped
/// witness, side Adam an M_A-shaped one. The free player keeps all
/// moves. Invalid transducer moves lead to a losing sink for its side.
ParityGame mc_replay_game(const Automaton& a_dnf, const LassoWord& w, const Transducer& t,
                          Player side);

/// Letter game with Eve's choices driven by an M_E-shaped transducer;
/// Eve wins the result iff the transducer wins the letter game.
ParityGame letter_replay_game(const LetterGame& lg, const Transducer& t);

/// For a lost Eve letter game: plays the solver's counter strategy
/// against a candidate transducer and returns the generated word (which
/// the counter forces into L(A) with a rejected run).
LassoWord counterexample_word(const LetterGame& lg, const Solution& sol, const Transducer& t);

} // namespace gfgaut
