#pragma once
/*
 * Constrained existence: can P1 force reaching the target with cost below a
 * given profile?  Decided three ways: through the lexicographic value,
 * through the componentwise frontier, and by a bounded AND-OR search that
 * shares no code with the fixpoint solver.
 *
 * Also hosts the quantified subset-sum reduction used as a test generator:
 * "exists x1 forall x2 exists x3 ... : sum xi*ai = T" becomes a chain game
 * where picking/skipping each value splits its weight across the two
 * components.
 */

#include <cstdint>
#include <vector>

#include "mwr/fixpoint.hpp"
#include "mwr/game.hpp"

namespace mwr {

bool ce_lex(const Game& game, int v0, const CostProfile& x);
bool ce_comp(const Game& game, int v0, const CostProfile& x);

// Depth-|V| AND-OR search with componentwise budget pruning; independent of
// the fixpoint path, must agree with ce_comp.
bool ce_comp_search(const Game& game, int v0, const CostProfile& x);

struct QssInstance {
    Game game;
    int v0 = 0;
    CostProfile bound;           // (T, sum - T)
    bool trivially_false = false;  // T exceeds the total sum
};

// Chain-gadget game whose componentwise CE answer at `bound` equals the
// truth of the alternating quantified subset-sum formula.
QssInstance qss_to_game(const std::vector<std::uint64_t>& values,
                        std::uint64_t threshold);

// Ground truth by direct quantifier recursion (n <= 20).
bool brute_qss(const std::vector<std::uint64_t>& values,
               std::uint64_t threshold);

}  // namespace mwr
