/* transducer.hpp -- finite-memory strategies in the (I,O,M,iota,rho,chi) shape */

#pragma once

#include "gfgaut/condition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gfgaut {

/// Input/output tokens of strategy transducers. The letter games use
/// letters, automaton states, DNF clauses and (letter, clause) pairs;
/// epsilon marks memories that only update.
struct Token {
    enum class Kind : uint8_t { Epsilon, Letter, State, Clause, LetterClause };
    Kind kind = Kind::Epsilon;
    LetterId letter = 0;
    StateId state = 0;
    Clause clause;

    static Token epsilon() { return {}; }
    static Token make_letter(LetterId a);
    static Token make_state(StateId q);
    static Token make_clause(Clause c);
    static Token make_letter_clause(LetterId a, Clause c);

    static int compare(const Token& a, const Token& b);
    friend bool operator==(const Token& a, const Token& b) { return compare(a, b) == 0; }
    friend bool operator<(const Token& a, const Token& b) { return compare(a, b) < 0; }

    std::string to_string(const std::vector<std::string>& letters,
                          const std::vector<std::string>& states) const;
};

using MemoryId = uint32_t;

/// Deterministic finite-memory strategy: total transition function over
/// the tokens it is meant to consume, Moore-style output per memory.
struct Transducer {
    std::string name;
    MemoryId initial = 0;
    std::vector<std::string> memory_names;
    std::vector<Token> output; // chi
    std::map<std::pair<MemoryId, Token>, MemoryId> step;
    /// Trivial strategies (no real choice anywhere) are represented as a
    /// single memory that absorbs every token.
    bool absorbing = false;

    size_t memory_count() const { return output.size(); }
    MemoryId add_memory(std::string mname, Token out);
    void set_step(MemoryId m, Token t, MemoryId to);
    std::optional<MemoryId> next(MemoryId m, const Token& t) const;
    MemoryId next_or_throw(MemoryId m, const Token& t) const;

    static Transducer trivial(std::string name);
};

struct ParityGame;
struct PositionalStrategy;

/// Reads a positional strategy off as a transducer: memories are the
/// vertices of the strategy-restricted subgraph reachable from the
/// game's root, rho follows its edges under the input projection, chi
/// is the output projection of the vertex and the strategy's choice
/// there (-1 on opponent vertices). Two edges from one vertex that
/// project to the same token but different targets are an error.
Transducer strategy_to_transducer(
    const ParityGame& g, const PositionalStrategy& s,
    const std::function<Token(uint32_t from, uint32_t to)>& input_proj,
    const std::function<Token(uint32_t v, int64_t choice)>& output_proj);

} // namespace gfgaut
