#pragma once
/*
 * Reference implementations by backward induction on the depth-unfolded game
 * tree.  Deliberately primitive: only profile comparisons from game-core,
 * naive list scans, no sharing with the antichain machinery the solver uses.
 * Test-scale only.
 */

#include <vector>

#include "mwr/game.hpp"

namespace mwr {

// Minimal ensured profiles from v when the play must hit a target within
// `depth` steps.  depth = |V| is exact for plain games (2|V| for games built
// by the subset-expansion construction).
std::vector<CostProfile> brute_frontier(const Game& game, int v, Order order,
                                        int depth);

bool brute_ce(const Game& game, int v0, const CostProfile& x, Order order,
              int depth);

}  // namespace mwr
