/* oracle.hpp -- exact ground-truth machinery: membership, two-tier equivalence, composition trials */

#pragma once

#include "gfgaut/automaton.hpp"
#include "gfgaut/gfg.hpp"
#include "gfgaut/lasso.hpp"
#include "gfgaut/parity_game.hpp"

#include <random>

namespace gfgaut {

/// A counterexample word: omega when the period is nonempty, finite otherwise.
struct WordWitness {
    std::vector<LetterId> prefix;
    std::vector<LetterId> period;
    bool is_lasso() const { return !period.empty(); }
};

enum class VerdictKind : uint8_t { Verified, Falsified, NotFalsified };

struct CheckVerdict {
    VerdictKind kind = VerdictKind::NotFalsified;
    std::optional<WordWitness> witness;
    uint32_t lasso_bound = 0; // NotFalsified: lassos checked up to this bound
    std::string detail;
};

/// Does d_ref recognize L(a)? Tier 1 settles one inclusion exactly via
/// the breakpoint-or-subset nondeterministic form and per-priority SCC
/// emptiness; tier 2 settles the other via rank-based complementation
/// when the nondeterministic form is small enough, and otherwise falls
/// back to exhaustive lasso search up to the budget.
CheckVerdict reference_check(const Automaton& a, const Automaton& d_ref, uint32_t budget);

/// Same verdict lattice; exact when one side is deterministic or both
/// are over finite words, lasso-exhaustive otherwise.
CheckVerdict equivalence(const Automaton& a, const Automaton& b, uint32_t budget);

/// L(nd) and L(det) intersect? Exact; nd must be nondeterministic and
/// parity-convertible, det deterministic. Fills the witness on demand.
bool nondet_inter_det_nonempty(const Automaton& nd, const Automaton& det,
                               std::optional<WordWitness>* witness = nullptr);

/// Exact inclusion / equality for deterministic parity-like automata.
bool det_language_subset(const Automaton& a, const Automaton& b);
bool det_language_equal(const Automaton& a, const Automaton& b);

struct ComplementTooLarge : Error {
    using Error::Error;
};

/// Rank-based complement of a nondeterministic Buchi automaton (level
/// rankings bounded by 2(n - |accepting|), breakpoint on even ranks).
/// Throws ComplementTooLarge past the state cap.
Automaton rank_complement(const Automaton& nbw, size_t state_cap = 200000);

/// Copy of `a` with the alphabet reordered to `alphabet`; errors if the
/// letter sets differ.
Automaton align_alphabet(const Automaton& a, const std::vector<std::string>& alphabet);

struct CompositionTrial {
    uint32_t index = 0;
    std::string variant;
    bool eve_wins_ref = false;
    bool eve_wins_aut = false;
    std::string arena_text;
};

struct CompositionReport {
    uint32_t rounds = 0;
    uint32_t games_compared = 0;
    uint32_t discrepancies = 0;
    bool counter_arena_included = false;
    bool counter_arena_discriminates = false;
    CheckVerdict reference_verdict;
    GfgVerdict gfg;
    std::vector<CompositionTrial> failures;
};

/// Compares winner(g x d_ref) with winner(g x a) on random rooted
/// arenas in one-player-Adam, one-player-Eve and two-player variants.
/// For a non-compliant automaton the counter strategy's one-player game
/// is always included as trial 0. Refuses unverified references unless
/// forced.
CompositionReport composition_test(const Automaton& a, const Automaton& d_ref,
                                   uint32_t arena_size, uint32_t rounds, uint64_t seed,
                                   bool force = false);

enum class ArenaVariant : uint8_t { AllAdam, AllEve, TwoPlayer };

Arena random_arena(std::mt19937_64& rng, uint32_t max_size,
                   const std::vector<std::string>& alphabet, ArenaVariant variant);

ParityGame random_parity_game(std::mt19937_64& rng, uint32_t max_size, int max_priority);

} // namespace gfgaut
