#include <doctest.h>

#include "helpers.hpp"
#include "mwr/io.hpp"
#include "mwr/strategy.hpp"

using namespace mwr;
using mwrt::P;

TEST_CASE("parsing the shipped fixtures") {
    ParsedGame g2 = mwrt::fixture("g2.game");
    CHECK(g2.game.num_vertices() == 11);
    CHECK(g2.game.dim() == 2);
    CHECK_FALSE(g2.has_penalties);
    CHECK(g2.game.is_target(g2.game.find_vertex("v9")));
    CHECK(g2.game.initial() == g2.game.find_vertex("v0"));
    CHECK(g2.warnings.empty());

    ParsedGame f4 = mwrt::fixture("fig4.game");
    CHECK(f4.has_penalties);
    CHECK(f4.game.dim() == 1);
    CHECK(f4.penalties.size() ==
          static_cast<std::size_t>(f4.game.num_edges()));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_game("dim 2\nvertex a owner=1\nedge a b 1 1\n"),
                         "line 3: unknown vertex b", std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_game("dim 1\nvertex a owner=3\n"),
                         "line 2: expected owner=1 or owner=2",
                         std::runtime_error);
    CHECK_THROWS_AS(parse_game("dim 2\nvertex a owner=1\nedge a a 1 1 | 4\n"),
                    std::runtime_error);
}

TEST_CASE("round trip: parse, write, parse") {
    for (const char* name : {"g2.game", "g2_restricted.game", "fig4.game"}) {
        ParsedGame first = mwrt::fixture(name);
        std::string text = write_game(
            first.game, first.has_penalties ? &first.penalties : nullptr);
        ParsedGame second = parse_game(text);
        CHECK(second.game.num_vertices() == first.game.num_vertices());
        CHECK(second.game.num_edges() == first.game.num_edges());
        CHECK(second.penalties == first.penalties);
        CHECK(write_game(second.game,
                         second.has_penalties ? &second.penalties : nullptr) ==
              text);
    }
}

TEST_CASE("solve output matches the golden tables") {
    Game g = mwrt::fixture("g2.game").game;
    CHECK(emit_solve(g, solve(g, Order::Componentwise), Format::Human) ==
          mwrt::fixture_text("table1_comp.txt"));
    CHECK(emit_solve(g, solve(g, Order::Lexicographic), Format::Human) ==
          mwrt::fixture_text("table1_lex.txt"));
}

TEST_CASE("frontier serialization") {
    Game g = mwrt::fixture("g2.game").game;
    SolveResult res = solve(g, Order::Componentwise);
    int v0 = g.find_vertex("v0");
    CHECK(emit_frontier(g, "v0", frontier(res, v0), Format::Json) ==
          "{\"v0\":[[8,8]]}\n");
    CHECK(emit_frontier(g, "v0", frontier(res, v0), Format::Human) ==
          "v0: {(8,8)}\n");
    CHECK(emit_frontier(g, "v0", {CostProfile::top(2)}, Format::Json) ==
          "{\"v0\":[[\"inf\",\"inf\"]]}\n");
}

TEST_CASE("dot export mentions every vertex and edge") {
    Game g = mwrt::fixture("g2_restricted.game").game;
    std::string dot = export_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"v4\"") != std::string::npos);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    CHECK(dot.find("4,2") != std::string::npos);
}

TEST_CASE("strategy files round-trip through the verifier") {
    Game g = mwrt::fixture("g2.game").game;
    int v0 = g.find_vertex("v0");

    SolveResult lex = solve(g, Order::Lexicographic);
    PositionalStrategy pos = synth_lex_positional(g, lex);
    Decide d1 = read_strategy(g, write_positional(g, pos));
    CHECK(verify_strategy(g, d1, v0, P({8, 8}), Order::Lexicographic,
                          g.num_vertices())
              .pass);

    SolveResult comp = solve(g, Order::Componentwise);
    ParetoStrategy par(g, comp, v0, P({8, 8}));
    Decide d2 = read_strategy(g, write_pareto(g, par, g.num_vertices()));
    CHECK(verify_strategy(g, d2, v0, P({8, 8}), Order::Componentwise,
                          g.num_vertices())
              .pass);
}

TEST_CASE("multi-strategy files parse back") {
    ParsedGame f4 = mwrt::fixture("fig4.game");
    QuantGame qg = f4.quant();
    int v0 = f4.game.find_vertex("v0");
    MultiStrategy ms =
        read_multistrategy(f4.game, v0, mwrt::fixture_text("fig4.mstrat"));
    MultiEval ev = eval_multistrategy(qg, ms, v0);
    CHECK(ev.winning);
    CHECK(ev.pair == P({6, 12}));
    // And the writer emits something the reader accepts.
    MultiStrategy again = read_multistrategy(
        f4.game, v0, write_multistrategy(f4.game, ms));
    CHECK(eval_multistrategy(qg, again, v0).pair == P({6, 12}));
}

TEST_CASE("qss one-liner") {
    auto [values, threshold] = parse_qss("qss 2 5 1 6\n");
    CHECK(values == std::vector<std::uint64_t>{2, 5, 1});
    CHECK(threshold == 6);
    CHECK_THROWS_AS(parse_qss("qs 1 2"), std::runtime_error);
}

TEST_CASE("random games are seed-deterministic and valid") {
    RandomSpec spec;
    spec.vertices = 8;
    spec.dim = 3;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ParsedGame a = random_game(seed, spec);
        ParsedGame b = random_game(seed, spec);
        CHECK(write_game(a.game) == write_game(b.game));
        CHECK(a.game.validate().empty());
        CHECK(a.game.num_vertices() <= 8);
        CHECK(a.game.dim() == 3);
    }
    RandomSpec pen;
    pen.dim = 1;
    pen.with_penalties = true;
    ParsedGame q = random_game(5, pen);
    CHECK(q.has_penalties);
    CHECK(q.quant().warnings.empty());  // generator already zeroes P2 rows
}
