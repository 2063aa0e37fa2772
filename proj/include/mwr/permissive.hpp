#pragma once
/*
 * Single-weighted games with per-edge penalties, and multi-strategies that
 * allow sets of moves instead of single moves.  All questions about them are
 * answered on the subset-expanded two-weighted game: each P1 vertex gains one
 * auxiliary adversary vertex per nonempty successor subset; entering it pays
 * the penalty of the blocked edges, leaving it pays the cost of the taken
 * edge.  CP mode orders components (cost, penalty), PC swaps them.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mwr/fixpoint.hpp"
#include "mwr/game.hpp"
#include "mwr/strategy.hpp"

namespace mwr {

struct QuantGame {
    Game game;                            // dimension 1
    std::vector<std::uint64_t> penalties; // aligned with game.edges()
    // P2-sourced edges declaring nonzero penalties are zeroed on
    // construction; names recorded here for the caller to report.
    std::vector<std::string> warnings;

    QuantGame(Game g, std::vector<std::uint64_t> pens);
};

enum class ExtendMode { CostPenalty, PenaltyCost };

struct ExtendedGame {
    Game game;  // dimension 2
    ExtendMode mode = ExtendMode::CostPenalty;
    struct Origin {
        int origin = -1;          // vertex of the source game
        bool is_choice = false;   // auxiliary subset vertex?
        std::vector<int> subset;  // allowed successors (origin ids), sorted
    };
    std::vector<Origin> origins;  // per extended vertex
    std::vector<int> fwd;         // origin vertex -> extended vertex
};

int default_degree_cap();  // 16, overridable via MWR_DEGREE_CAP

ExtendedGame build_extended(const QuantGame& qg, ExtendMode mode,
                            int degree_cap = default_degree_cap());

// Constrained existence of a multi-strategy with worst cost <= c and
// penalty <= p (componentwise / the two lexicographic refinements).
bool mce1(const QuantGame& qg, int v0, std::uint64_t c, std::uint64_t p);
bool mce2(const QuantGame& qg, int v0, std::uint64_t c, std::uint64_t p);
bool mce3(const QuantGame& qg, int v0, std::uint64_t p, std::uint64_t c);

// Pareto frontier of (cost, penalty) pairs achievable by multi-strategies.
std::vector<CostProfile> mev1(const QuantGame& qg, int v0);

// Least (cost, penalty) lexicographically, and least (penalty, cost).
// Each is computed from the extended-game value and cross-checked against a
// double binary search over the corresponding decision procedure.
CostProfile mev2(const QuantGame& qg, int v0);
CostProfile mev3(const QuantGame& qg, int v0);

// Bounds within which every achievable finite pair lies: 2|V| * max cost and
// 2|V| * max per-vertex penalty sum, in the component order of `mode`.
std::pair<std::uint64_t, std::uint64_t> value_bounds(const QuantGame& qg,
                                                     ExtendMode mode);

class MultiStrategy {
public:
    // Positional: one fixed subset per P1 non-target vertex.
    static MultiStrategy positional(int start,
                                    std::map<int, std::vector<int>> subsets);

    // Table-driven: decisions keyed by (vertex, accumulated (cost,penalty)).
    static MultiStrategy table(int start,
                               std::map<std::pair<int, std::pair<std::uint64_t,
                                                                 std::uint64_t>>,
                                        std::vector<int>>
                                   entries);

    int start() const { return start_; }
    bool is_positional() const { return positional_; }

    // Allowed successors at v with accumulated cost/penalty; empty when the
    // strategy has no decision for this state.
    std::vector<int> decide(int v, std::uint64_t cost,
                            std::uint64_t penalty) const;

    // All recorded decision states, for export.
    std::vector<std::tuple<int, std::uint64_t, std::uint64_t,
                           std::vector<int>>>
    entries() const;

private:
    MultiStrategy() = default;
    int start_ = 0;
    bool positional_ = false;
    std::map<int, std::vector<int>> pos_;
    std::map<std::pair<int, std::pair<std::uint64_t, std::uint64_t>>,
             std::vector<int>>
        table_;
};

// Replays the budget-tracking strategy for `pair` on the extended game and
// tabulates the subset choices at every reachable (vertex, cost, penalty).
MultiStrategy extract_multistrategy(const QuantGame& qg,
                                    const ExtendedGame& eg,
                                    const SolveResult& result, int v0,
                                    const CostProfile& pair);

struct MultiEval {
    bool winning = false;
    CostProfile pair;  // (worst cost, worst penalty); cost inf if not winning
};

// Exhaustive exploration of the plays consistent with ms, to depth 2|V|.
MultiEval eval_multistrategy(const QuantGame& qg, const MultiStrategy& ms,
                             int v0);

// Folds a two-weighted game into a penalty game: each edge becomes a relay
// vertex whose blocked escape to a sink carries the second weight component
// as penalty.  CE on the input at (x,y) matches mce1 on the output.
QuantGame twodim_to_penalty_game(const Game& g2);

}  // namespace mwr
