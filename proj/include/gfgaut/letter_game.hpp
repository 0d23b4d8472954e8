/* letter_game.hpp -- letter games, compiled to parity via Rabin pairs + IAR */

#pragma once

#include "gfgaut/automaton.hpp"
#include "gfgaut/parity_game.hpp"
#include "gfgaut/transducer.hpp"

namespace gfgaut {

enum class ConfigKind : uint8_t { State, Choice, Obligation };

/// A game whose winning condition for Eve is the disjunction of two
/// max-even parity streams; -1 marks a vertex silent for that stream.
struct TwoStreamGame {
    std::vector<std::vector<Vertex>> succ;
    std::vector<bool> eve_owned;
    std::vector<int> prio1, prio2;
    Vertex root = 0;
};

struct IarCompiled {
    ParityGame game;
    std::vector<Vertex> origin; // per compiled vertex: the source vertex
};

/// Compiles the disjunction into a single parity condition: each stream
/// contributes one Rabin chain pair per even priority, and an index
/// appearance record over the union of pairs yields vertex priorities.
IarCompiled iar_disjunction_to_parity(const TwoStreamGame& g);

/// A letter game over the DNF form of an automaton, paired with a
/// deterministic reference for the language side of the winning
/// condition. Rounds pass through three configuration layers:
///   State (q, d)            -- the letter picker moves,
///   Choice (q, x, d')       -- Eve resolves the disjunction of clauses,
///   Obligation (C, d')      -- Adam picks a state of the clause.
/// The winning condition is a disjunction of two parity streams (run
/// priorities on State vertices, reference priorities on Choice
/// vertices), compiled to a single parity condition by an index
/// appearance record over the union of the streams' Rabin chain pairs.
struct LetterGame {
    bool adam_game = false;
    Automaton aut; // DNF form
    Automaton ref;
    ParityGame game;
    // per-vertex configuration data
    std::vector<ConfigKind> kind;
    std::vector<StateId> state;     // State vertices
    std::vector<StateId> ref_state; // post-advance on Choice/Obligation
    std::vector<LetterId> letter;   // Choice/Obligation vertices
    std::vector<Clause> clause;     // Obligation vertices

    bool has_real_choice(ConfigKind k) const;
};

/// Adam picks letters, Eve resolves nondeterminism, Adam universality;
/// Eve wins iff the run satisfies the acceptance or the reference
/// rejects the word. Solver-Eve is Eve.
LetterGame build_eve_letter_game(const Automaton& a, const Automaton& d_ref);

/// Eve picks letters (and still resolves nondeterminism); Adam wins iff
/// the run violates the acceptance or the reference accepts the word.
/// Constructed with roles flipped so that solver-Eve is Adam; this is
/// the letter game of the dual automaton up to renaming conditions.
LetterGame build_adam_letter_game(const Automaton& a, const Automaton& d_ref);

struct LetterGameVerdict {
    bool compliant = false;
    Solution solution;
    /// Set when compliant: Eve's game yields the clause-choosing
    /// transducer over Sigma+Q; Adam's game the state-choosing
    /// transducer over (letter, clause) pairs.
    std::optional<Transducer> witness;
    /// Set when not compliant: letter-emitting strategy of the opponent,
    /// ready for the one-player-game translation.
    std::optional<Transducer> counter;
};

LetterGameVerdict solve_letter_game(const LetterGame& lg);

} // namespace gfgaut
