#pragma once
/*
 * Strategy synthesis from a solve result, and exhaustive verification of a
 * strategy against every adversary behavior.
 *
 * The Pareto strategy tracks only the accumulated cost: at each P1 vertex it
 * looks for frontier profiles still affordable within the target budget,
 * picks the lexicographically least and follows the recorded choice.  The
 * positional strategy reads the lexicographic singleton value directly.
 */

#include <functional>
#include <map>
#include <vector>

#include "mwr/fixpoint.hpp"
#include "mwr/game.hpp"

namespace mwr {

// Decision callback: (current vertex, accumulated cost) -> successor id,
// or -1 when the strategy has no move there.
using Decide = std::function<int(int, const CostProfile&)>;

class ParetoStrategy {
public:
    // result must be componentwise; c must be a finite generator of I*(u).
    ParetoStrategy(const Game& game, const SolveResult& result, int start,
                   CostProfile c);

    int start() const { return start_; }
    const CostProfile& budget() const { return budget_; }

    int next(int v, const CostProfile& accumulated) const;

    Decide as_decide() const {
        return [this](int v, const CostProfile& acc) { return next(v, acc); };
    }

private:
    const Game* game_;
    const SolveResult* result_;
    int start_;
    CostProfile budget_;
};

struct PositionalStrategy {
    std::map<int, int> moves;          // P1 non-target vertex -> successor
    std::vector<int> unmapped;         // P1 vertices with value inf

    Decide as_decide() const {
        return [this](int v, const CostProfile&) {
            auto it = moves.find(v);
            return it == moves.end() ? -1 : it->second;
        };
    }
};

PositionalStrategy synth_lex_positional(const Game& game,
                                        const SolveResult& result);

struct VerificationReport {
    bool pass = false;
    CostProfile worst;               // join/max of outcome costs
    int max_steps = 0;               // longest explored distance to target
    std::vector<int> counterexample; // offending play when pass = false
};

// Exhaustive DFS: P1 follows `decide`, P2 branches on every successor.
// Passes iff every branch reaches a target within `depth` steps with
// accumulated cost below c under `order`.
VerificationReport verify_strategy(const Game& game, const Decide& decide,
                                   int start, const CostProfile& c,
                                   Order order, int depth);

// Every positional P1 strategy together with its minimal ensured profile
// from v0 (join over adversary outcomes; all-inf if some play misses the
// target within |V| steps).  Throws if the strategy count exceeds cap.
std::vector<std::pair<PositionalStrategy, CostProfile>> enumerate_positional(
    const Game& game, int v0, Order order, std::uint64_t cap = 1000000);

}  // namespace mwr
