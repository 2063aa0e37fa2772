#pragma once
/*
 * Line-oriented text formats and serialization.
 *
 * Game grammar (one directive per line, `#` starts a comment):
 *   dim <d>
 *   vertex <name> owner=<1|2> [target]
 *   edge <u> <v> <w1> ... <wd> [| <penalty>]
 *   init <name>
 * Penalty annotations are only legal when d = 1 and turn the file into a
 * penalty game.  All emitters sort their keys so output is byte-stable.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "mwr/fixpoint.hpp"
#include "mwr/game.hpp"
#include "mwr/permissive.hpp"
#include "mwr/strategy.hpp"

namespace mwr {

enum class Format { Human, Json, Tsv, Dot };

struct ParsedGame {
    Game game;
    bool has_penalties = false;
    std::vector<std::uint64_t> penalties;  // per edge; zeros if absent
    std::vector<std::string> warnings;

    QuantGame quant() const;  // requires d = 1
};

// Throws std::runtime_error with "line N: ..." diagnostics.
ParsedGame parse_game(const std::string& text);
ParsedGame load_game(const std::string& path);

std::string write_game(const Game& game,
                       const std::vector<std::uint64_t>* penalties = nullptr);

std::string emit_solve(const Game& game, const SolveResult& result,
                       Format format);
std::string emit_frontier(const Game& game, const std::string& vertex_name,
                          const std::vector<CostProfile>& front, Format format);
std::string emit_report(const Game& game, const VerificationReport& report,
                        Format format);
std::string export_dot(const Game& game,
                       const std::vector<std::uint64_t>* penalties = nullptr);

// Strategy files: `move <vertex> <successor>` lines for positional
// strategies, `decide <vertex> <c1,...,cd> <successor>` for budget-tracking
// ones (one line per reachable decision state).
std::string write_positional(const Game& game, const PositionalStrategy& s);
std::string write_pareto(const Game& game, const ParetoStrategy& s, int depth);
// Parses either form back into a decision callback.
Decide read_strategy(const Game& game, const std::string& text);

// Multi-strategy files: `allow <vertex> <cost> <penalty> <v1,v2,...>` lines
// (cost/penalty both 0 and ignored for positional strategies: `allow*`).
std::string write_multistrategy(const Game& game, const MultiStrategy& ms);
MultiStrategy read_multistrategy(const Game& game, int start,
                                 const std::string& text);

// Seed-deterministic generator (mt19937_64): every vertex keeps at least one
// successor; owners, targets, weights and the optional penalties are drawn
// uniformly.  Penalties are attached when with_penalties is set (d must be 1).
struct RandomSpec {
    int vertices = 6;
    int dim = 2;
    std::uint64_t max_weight = 4;
    bool with_penalties = false;
    std::uint64_t max_penalty = 4;
    double extra_edge_chance = 0.35;
};
ParsedGame random_game(std::uint64_t seed, const RandomSpec& spec);

// `qss a1 a2 ... an T` one-liner.
std::pair<std::vector<std::uint64_t>, std::uint64_t> parse_qss(
    const std::string& text);

}  // namespace mwr
