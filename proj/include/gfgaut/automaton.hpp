/* automaton.hpp -- alternating word automata and structure-preserving transformations */

#pragma once

#include "gfgaut/condition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfgaut {

enum class AccKind : uint8_t { FiniteWords, Weak, Buchi, CoBuchi, Parity, Labels };

/// Tagged acceptance condition. Set kinds (FiniteWords, Weak, Buchi,
/// CoBuchi) carry a sorted state set; Parity carries one priority per
/// state (max-even semantics: a path is accepting iff the highest
/// priority seen infinitely often is even). Labels is the monitor
/// labeling used as the outer input of automata composition; it has no
/// acceptance semantics of its own.
struct Acceptance {
    AccKind kind = AccKind::Buchi;
    std::vector<StateId> set;        // FiniteWords/Weak/Buchi/CoBuchi
    std::vector<int> priority;       // Parity: indexed by state
    std::vector<std::string> labels; // Labels: indexed by state

    static Acceptance finite_words(std::vector<StateId> final_states);
    static Acceptance weak(std::vector<StateId> accepting);
    static Acceptance buchi(std::vector<StateId> accepting);
    static Acceptance co_buchi(std::vector<StateId> rejecting);
    static Acceptance parity(std::vector<int> priorities);
    static Acceptance state_labels(std::vector<std::string> labels);

    bool in_set(StateId q) const;
    bool is_parity_like() const;
    /// Priority of a state under the parity encoding:
    /// Buchi/Weak(F): 2 on F else 1; CoBuchi(R): 1 on R else 0; Parity: as given.
    int parity_priority(StateId q) const;
    int max_parity_priority(size_t num_states) const;
};

enum class TransitionMode : uint8_t { Deterministic, Nondeterministic, Universal, Alternating };

enum class NormalForm : uint8_t { Dnf, Cnf };

/// An alternating word automaton. delta is stored row-major over
/// (state, letter); entries may be absent while an automaton is being
/// assembled, and validate() reports missing ones. All operations
/// assume a validated automaton.
struct Automaton {
    std::string name;
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    StateId initial = 0;
    std::vector<std::optional<Cond>> delta; // states.size() * alphabet.size()
    Acceptance acceptance;

    size_t num_states() const { return states.size(); }
    size_t num_letters() const { return alphabet.size(); }

    void resize_delta() { delta.assign(states.size() * alphabet.size(), std::nullopt); }
    void set_cond(StateId q, LetterId a, Cond c);
    bool has_cond(StateId q, LetterId a) const;
    const Cond& cond(StateId q, LetterId a) const;

    std::optional<StateId> state_index(const std::string& name) const;
    std::optional<LetterId> letter_index(const std::string& name) const;
};

struct Violation {
    enum class Code {
        EmptyAlphabet,
        EmptyStates,
        InitialScope,
        MissingTransition,
        LeafScope,
        WeakHomogeneity,
        AcceptanceScope,
    };
    Code code;
    std::string detail;
};

/// Report-style validation: returns the list of violated invariants,
/// empty iff the automaton is well-formed.
std::vector<Violation> validate(const Automaton& a);
void require_valid(const Automaton& a);

TransitionMode classify(const Automaton& a);
bool is_deterministic(const Automaton& a);

/// And<->Or swapped in every condition, acceptance complemented:
/// Buchi(F) -> CoBuchi(F), CoBuchi(R) -> Buchi(R), Weak(F) -> Weak(Q\F),
/// Parity -> all priorities incremented. Rejects FiniteWords.
Automaton dualize(const Automaton& a);

/// Rewrites every transition condition into the requested two-level
/// form, canonicalized, with absorption applied.
Automaton normalize(const Automaton& a, NormalForm form);

/// Copy of a rooted at q.
Automaton residual(const Automaton& a, StateId q);

/// Renders a condition with `&` binding tighter than `|`; parentheses
/// only around Or operands nested inside And.
std::string cond_to_string(const Cond& c, const std::vector<std::string>& state_names);

/// Replaces characters outside [A-Za-z0-9_.-] with '_'.
std::string sanitize_identifier(const std::string& s);
/// Makes names pairwise distinct by appending numeric suffixes.
std::vector<std::string> unique_names(std::vector<std::string> names);

/// Strongly connected components of the transition graph (edges
/// q -> q' whenever q' occurs in some delta(q, a)), in reverse
/// topological order. Singleton components without a self-edge count
/// as trivial.
struct SccInfo {
    std::vector<std::vector<StateId>> components;
    std::vector<uint32_t> component_of;
    std::vector<bool> nontrivial; // has an internal edge
};
SccInfo transition_sccs(const Automaton& a);

} // namespace gfgaut
