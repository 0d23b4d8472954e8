/* condition.hpp -- canonical positive boolean formulas over state identifiers */

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gfgaut {

using StateId = uint32_t;
using LetterId = uint32_t;

/// Error type thrown by library operations on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CondKind : uint8_t { Leaf, And, Or };

/// A positive boolean formula over states, kept in canonical form:
/// n-ary flattened (no And under And, no Or under Or), operands sorted
/// by the total order on conditions and deduplicated, never empty.
/// Canonical form makes syntactic equality coincide with structural
/// equality, which product constructions rely on for vertex dedup.
class Cond {
public:
    static Cond leaf(StateId q);
    static Cond conj(std::vector<Cond> ops);
    static Cond disj(std::vector<Cond> ops);
    static Cond make(CondKind k, std::vector<Cond> ops);

    CondKind kind() const { return kind_; }
    bool is_leaf() const { return kind_ == CondKind::Leaf; }
    StateId state() const;
    const std::vector<Cond>& operands() const;

    bool contains_and() const;
    bool contains_or() const;
    /// Calls fn for every leaf state, with repetition.
    void for_each_state(const std::function<void(StateId)>& fn) const;
    /// Evaluates the formula under a truth assignment on states.
    bool eval(const std::function<bool(StateId)>& truth) const;
    /// And<->Or swapped everywhere, leaves unchanged.
    Cond dual() const;

    /// Splits a non-leaf condition into two halves of its (sorted)
    /// operand list, each re-wrapped with the same connective. Used by
    /// product constructions that want binary branching vertices.
    std::pair<Cond, Cond> split_binary() const;

    static int compare(const Cond& a, const Cond& b);
    friend bool operator==(const Cond& a, const Cond& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Cond& a, const Cond& b) { return compare(a, b) != 0; }
    friend bool operator<(const Cond& a, const Cond& b) { return compare(a, b) < 0; }

private:
    Cond() = default;
    CondKind kind_ = CondKind::Leaf;
    StateId state_ = 0;
    std::vector<Cond> ops_;
};

/// A clause is a sorted, deduplicated set of states. DNF and CNF are
/// antichains of clauses (absorption applied).
using Clause = std::vector<StateId>;
using ClauseList = std::vector<Clause>;

ClauseList to_dnf_clauses(const Cond& c);
ClauseList to_cnf_clauses(const Cond& c);
Cond cond_from_dnf(const ClauseList& clauses);
Cond cond_from_cnf(const ClauseList& clauses);

/// Clauses of a condition already in two-level disjunctive shape
/// (Or of And/leaf, an And of leaves, or a single leaf). Throws if the
/// condition nests deeper; normalize first.
ClauseList dnf_shape_clauses(const Cond& c);

} // namespace gfgaut
