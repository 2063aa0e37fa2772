#include <doctest.h>

#include "helpers.hpp"
#include "mwr/constrained.hpp"

using namespace mwr;
using mwrt::P;

TEST_CASE("lexicographic constrained existence") {
    Game g = mwrt::fixture("g2.game").game;
    int v0 = g.find_vertex("v0");
    CHECK(ce_lex(g, v0, P({8, 8})));
    CHECK_FALSE(ce_lex(g, v0, P({8, 7})));
    CHECK(ce_lex(g, v0, P({9, 0})));
}

TEST_CASE("componentwise constrained existence, both deciders") {
    Game g = mwrt::fixture("g2.game").game;
    int v0 = g.find_vertex("v0");
    CHECK(ce_comp(g, v0, P({8, 8})));
    CHECK_FALSE(ce_comp(g, v0, P({10, 6})));
    CHECK(ce_comp(g, v0, P({9, 9})));

    CHECK(ce_comp_search(g, v0, P({8, 8})));
    CHECK_FALSE(ce_comp_search(g, v0, P({10, 6})));
    CHECK_FALSE(ce_comp_search(g, v0, P({7, 1000})));
}

TEST_CASE("zero budget at a target is enough") {
    Game g(2);
    int t = g.add_vertex("t", Player::P1, true);
    g.add_edge(t, t, P({0, 0}));
    CHECK(ce_comp_search(g, t, P({0, 0})));
}

TEST_CASE("the lexicographic value is componentwise ensurable") {
    Game g = mwrt::fixture("g2.game").game;
    int v0 = g.find_vertex("v0");
    SolveResult lex = solve(g, Order::Lexicographic);
    CHECK(ce_comp(g, v0, frontier(lex, v0).front()));
}

TEST_CASE("quantified subset-sum: direct evaluation") {
    CHECK(brute_qss({2}, 2));
    CHECK_FALSE(brute_qss({1, 2}, 3));  // adversary may skip the 2
    CHECK(brute_qss({}, 0));
    CHECK_FALSE(brute_qss({}, 1));
    CHECK_FALSE(brute_qss({1, 2, 3}, 3));  // no first pick works for both replies
    CHECK(brute_qss({1, 0, 3}, 4));  // the adversary's zero changes nothing
}

TEST_CASE("quantified subset-sum through the chain game") {
    auto run = [](std::vector<std::uint64_t> values, std::uint64_t t) {
        QssInstance inst = qss_to_game(values, t);
        REQUIRE(inst.game.validate().empty());
        return ce_comp(inst.game, inst.v0, inst.bound);
    };
    CHECK(run({2}, 2));
    CHECK_FALSE(run({1, 2}, 3));
    CHECK(run({}, 0));

    QssInstance over = qss_to_game({1, 2}, 7);
    CHECK(over.trivially_false);
    CHECK_FALSE(ce_comp(over.game, over.v0, over.bound));
}

TEST_CASE("chain game shape") {
    QssInstance inst = qss_to_game({3, 1, 4}, 4);
    const Game& g = inst.game;
    CHECK(g.dim() == 2);
    CHECK(inst.bound == P({4, 4}));
    CHECK(g.owner(g.find_vertex("x1")) == Player::P1);
    CHECK(g.owner(g.find_vertex("x2")) == Player::P2);
    CHECK(g.owner(g.find_vertex("x3")) == Player::P1);
    CHECK(g.is_target(g.find_vertex("y")));
}
