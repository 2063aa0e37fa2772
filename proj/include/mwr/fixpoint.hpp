#pragma once
/*
 * Value iteration for multi-weighted reachability: per-vertex antichains of
 * ensured cost profiles, refined synchronously until they stabilize.  While
 * iterating we record, for every profile that newly appears at a P1 vertex,
 * which successor (and which successor profile) produced it — these choice
 * tables are what strategy synthesis replays later.
 *
 * Componentwise mode works on full antichains via the upset algebra; the
 * lexicographic mode degenerates to singletons (min/max over successors).
 */

#include <map>
#include <vector>

#include "mwr/game.hpp"
#include "mwr/upset.hpp"

namespace mwr {

struct ChoiceEntry {
    int successor = -1;    // chosen successor vertex
    CostProfile residual;  // profile at the successor; entry key = residual + w
};

using ProfileChoiceMap = std::map<CostProfile, ChoiceEntry, LexLess>;
using ProfileIterMap = std::map<CostProfile, int, LexLess>;

struct SolveResult {
    Order order = Order::Componentwise;
    int dim = 0;
    // Per-vertex stabilized antichain, sorted lexicographically.
    std::vector<std::vector<CostProfile>> frontiers;
    // Per P1 non-target vertex: finite frontier profile -> how to achieve it.
    std::vector<ProfileChoiceMap> choices;
    // Iteration at which each surviving profile first appeared.
    std::vector<ProfileIterMap> first_occurrence;
    int k_star = 0;      // first k with I^{k+1} = I^k
    int iterations = 0;  // steps computed, including the confirming one
};

// One antichain per vertex; the rolling state of the iteration.
using AntichainState = std::vector<std::vector<CostProfile>>;

AntichainState init_state(const Game& game);

// One synchronous update from a frozen snapshot; targets stay at {0}.
AntichainState step(const Game& game, const AntichainState& current,
                    Order order);

SolveResult solve(const Game& game, Order order);

const std::vector<CostProfile>& frontier(const SolveResult& result, int v);

// Is x an ensured profile from v (i.e. dominated by the frontier)?
bool ensures(const SolveResult& result, int v, const CostProfile& x);

// Re-checks the structural invariants of a finished result against its game;
// throws std::logic_error on violation.  Cheap; also called by solve itself.
void check_result_invariants(const Game& game, const SolveResult& result);

}  // namespace mwr
