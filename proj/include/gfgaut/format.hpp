/* format.hpp -- the line-oriented text formats for automata, arenas, games, words */

#pragma once

#include "gfgaut/automaton.hpp"
#include "gfgaut/lasso.hpp"
#include "gfgaut/parity_game.hpp"
#include "gfgaut/transducer.hpp"

namespace gfgaut {

struct ParseError : Error {
    ParseError(std::string msg, size_t line, size_t col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line), column(col) {}
    size_t line;
    size_t column;
};

/// Grammar (UTF-8, `#` comments):
///   automaton <name>
///   alphabet: a b
///   states: q0 qa qb r
///   initial: q0
///   acceptance: buchi { qa qb }   # cobuchi | weak | finite | parity { q:1 } | labels { q:a }
///   delta q0 a = q0 | (qa & r) | qb
/// `&` binds tighter than `|`; every (state, letter) pair needs exactly
/// one delta line.
Automaton parse_automaton(const std::string& text);
std::string render_automaton(const Automaton& a);

/// Arena / parity game format: `vertex v owner=E|A [label=a] [priority=0]`,
/// `edge v -> u`, `root v`.
Arena parse_arena(const std::string& text);
std::string render_arena(const Arena& r);
ParityGame parse_parity_game(const std::string& text);
std::string render_parity_game(const ParityGame& g);

/// Word syntax: `u(v)^w` for lassos (e.g. `ab(ba)^w`), plain `u` for
/// finite words. Letters are single characters of the alphabet.
struct ParsedWord {
    std::vector<LetterId> prefix;
    std::vector<LetterId> period; // empty for finite words
    bool is_lasso() const { return !period.empty(); }
    LassoWord lasso() const { return LassoWord::make(prefix, period); }
};
ParsedWord parse_word(const std::string& text, const std::vector<std::string>& alphabet);
std::string render_lasso(const LassoWord& w, const std::vector<std::string>& alphabet);
std::string render_finite_word(const std::vector<LetterId>& w,
                               const std::vector<std::string>& alphabet);

/// Human-readable strategy transducer dump (output only).
std::string render_transducer(const Transducer& t, const std::vector<std::string>& alphabet,
                              const std::vector<std::string>& states);

} // namespace gfgaut
