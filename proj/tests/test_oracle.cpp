#include <doctest.h>

#include "helpers.hpp"
#include "mwr/fixpoint.hpp"
#include "mwr/oracle.hpp"

using namespace mwr;
using mwrt::P;

TEST_CASE("backward induction reproduces the running-example frontiers") {
    Game g = mwrt::fixture("g2.game").game;
    int depth = g.num_vertices();
    CHECK(brute_frontier(g, g.find_vertex("v0"), Order::Componentwise, depth) ==
          std::vector<CostProfile>{P({8, 8})});
    CHECK(brute_frontier(g, g.find_vertex("v4"), Order::Componentwise, depth) ==
          std::vector<CostProfile>{P({3, 5}), P({5, 3})});
    CHECK(brute_frontier(g, g.find_vertex("v9"), Order::Componentwise, 0) ==
          std::vector<CostProfile>{P({0, 0})});
    CHECK(brute_frontier(g, g.find_vertex("v0"), Order::Lexicographic, depth) ==
          std::vector<CostProfile>{P({8, 8})});
}

TEST_CASE("brute-force constrained existence") {
    Game g = mwrt::fixture("g2.game").game;
    int v0 = g.find_vertex("v0");
    int depth = g.num_vertices();
    CHECK(brute_ce(g, v0, P({8, 8}), Order::Componentwise, depth));
    CHECK_FALSE(brute_ce(g, v0, P({8, 7}), Order::Componentwise, depth));
    CHECK(brute_ce(g, v0, CostProfile::top(2), Order::Componentwise, depth));
}

TEST_CASE("oracle matches the solver on every vertex") {
    Game g = mwrt::fixture("g2.game").game;
    for (Order order : {Order::Componentwise, Order::Lexicographic}) {
        SolveResult res = solve(g, order);
        for (int v = 0; v < g.num_vertices(); ++v)
            CHECK(frontier(res, v) ==
                  brute_frontier(g, v, order, g.num_vertices()));
    }
}
