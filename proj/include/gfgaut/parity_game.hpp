/* parity_game.hpp -- arenas, parity games, attractors, Zielonka solver */

#pragma once

#include "gfgaut/condition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfgaut {

using Vertex = uint32_t;

enum class Player : uint8_t { Eve, Adam };

inline Player opponent(Player p) { return p == Player::Eve ? Player::Adam : Player::Eve; }

/// A letter-labeled game graph with an ownership partition. Every
/// vertex must have at least one successor.
struct Arena {
    std::vector<std::string> vnames;
    std::vector<std::string> labels; // letter name per vertex; may be empty strings
    std::vector<bool> eve_owned;
    std::vector<std::vector<Vertex>> succ;
    std::optional<Vertex> root;

    size_t size() const { return succ.size(); }
    Vertex add_vertex(std::string name, std::string label, bool eve);
    void add_edge(Vertex from, Vertex to) { succ[from].push_back(to); }
    void check() const; // throws on dangling edges / sink vertices
};

/// Max-even parity game: Eve wins a play iff the highest priority seen
/// infinitely often is even.
struct ParityGame {
    std::vector<std::string> vnames;
    std::vector<bool> eve_owned;
    std::vector<std::vector<Vertex>> succ;
    std::vector<int> priority;
    std::optional<Vertex> root;

    size_t size() const { return succ.size(); }
    bool owned_by(Vertex v, Player p) const {
        return p == Player::Eve ? eve_owned[v] : !eve_owned[v];
    }
    void check() const;
};

struct PositionalStrategy {
    Player owner = Player::Eve;
    /// Chosen successor per vertex; -1 where undefined.
    std::vector<int64_t> choice;
};

struct Solution {
    std::vector<bool> eve_region;
    PositionalStrategy eve_strategy;  // defined on Eve-owned vertices of her region
    PositionalStrategy adam_strategy; // defined on Adam-owned vertices of his region
    bool eve_wins(Vertex v) const { return eve_region[v]; }
};

/// Least set containing `target` from which `player` can force entry in
/// one step; restricted to the subgame induced by `alive`.
/// Tie-breaking: the lowest-numbered witness successor is recorded.
std::vector<bool> attractor(const ParityGame& g, const std::vector<bool>& alive,
                            std::vector<bool> target, Player player,
                            PositionalStrategy* strategy = nullptr);

/// Zielonka's recursive algorithm; returns the full partition and a
/// winning positional strategy for each player on their region.
Solution solve_parity(const ParityGame& g);

/// True iff every cycle reachable from `from` in the strategy-restricted
/// graph has max priority of the owner's winning parity.
bool check_strategy(const ParityGame& g, const PositionalStrategy& s,
                    const std::vector<bool>& from);

/// Exists a cycle, within `alive` and reachable from `start` (all alive
/// vertices when empty), whose maximum priority has the given parity.
bool exists_cycle_with_parity(const std::vector<std::vector<Vertex>>& succ,
                              const std::vector<int>& priority, bool want_even,
                              const std::vector<bool>& alive,
                              const std::vector<Vertex>& start = {});

/// Exists a cycle whose maxima in both priority streams are even
/// (intersection emptiness for a pair of parity conditions; pass an
/// all-even second stream for the single-condition case).
bool exists_cycle_two_even(const std::vector<std::vector<Vertex>>& succ,
                           const std::vector<int>& prio1, const std::vector<int>& prio2,
                           const std::vector<Vertex>& start);

/// Brute-force reference solver: enumerates positional strategies of
/// each player and checks all cycle outcomes. Exponential; test scale only.
std::vector<bool> brute_force_eve_region(const ParityGame& g);

} // namespace gfgaut
