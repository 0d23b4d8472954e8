/* products.hpp -- synchronized products, automata composition, model-checking games */

#pragma once

#include "gfgaut/automaton.hpp"
#include "gfgaut/lasso.hpp"
#include "gfgaut/parity_game.hpp"
#include "gfgaut/transducer.hpp"

namespace gfgaut {

/// Structure of the synchronized product between an arena and an
/// automaton: vertices are (arena vertex, condition) pairs restricted
/// to the reachable set, conjunction/disjunction vertices split in two,
/// Eve owning disjunction vertices and state vertices on Eve-owned
/// arena positions.
struct ProductGraph {
    std::vector<std::vector<Vertex>> succ;
    std::vector<bool> eve_owned;
    std::vector<std::optional<StateId>> aut_state; // set on state vertices
    std::vector<Vertex> arena_vertex;
    std::vector<std::string> vnames;
    std::optional<Vertex> root;
};

ProductGraph product_graph(const Arena& r, const Automaton& a);

/// Product compiled to a parity game: state vertices carry the
/// automaton priority shifted into {2,3,...}, neutral vertices 0.
ParityGame synchronized_product(const Arena& r, const Automaton& a);

/// Finite game over (lasso position, condition) pairs; Eve wins iff the
/// automaton accepts the word.
ParityGame model_checking_game(const LassoWord& w, const Automaton& a);

bool accepts(const Automaton& a, const LassoWord& w);

/// Membership for finite-word automata.
bool accepts_finite(const Automaton& a, const std::vector<LetterId>& word);

/// Composition of a state-labeled outer automaton with an inner
/// automaton over the labels' alphabet.
Automaton compose(const Automaton& outer, const Automaton& inner);

/// A rooted game viewed as an alternating automaton over {a}: the
/// unique word is accepted iff Eve wins the game from the root.
Automaton game_as_automaton(const ParityGame& g);

/// One-player game read off a letter-emitting strategy transducer:
/// vertices are memories, edges its transitions, labels the letter
/// component of the outputs.
Arena transducer_to_one_player_game(const Transducer& m,
                                    const std::vector<std::string>& alphabet, Player owner);

/// Game on a product structure with winning condition "the label word
/// along the visited automaton states belongs to L(det_ref)"; labels
/// are read through `beta` (outer state -> det_ref letter).
ParityGame monitor_game(const ProductGraph& pg, const std::vector<LetterId>& beta,
                        const Automaton& det_ref);

/// Deterministic successor state; throws if the automaton is not
/// deterministic at (q, x).
StateId det_step(const Automaton& det, StateId q, LetterId x);

} // namespace gfgaut
