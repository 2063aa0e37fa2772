// Acceptance gate: one line per criterion, nonzero exit if anything fails.
// Everything here re-checks the solver against independent oracles, shipped
// golden values and the documented runtime budgets.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include "mwr/constrained.hpp"
#include "mwr/fixpoint.hpp"
#include "mwr/io.hpp"
#include "mwr/oracle.hpp"
#include "mwr/permissive.hpp"
#include "mwr/strategy.hpp"

using namespace mwr;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point begin =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             begin)
            .count();
    }
};

void report(int criterion, bool ok, const std::string& what, double secs,
            double budget) {
    bool in_time = secs <= budget;
    if (!ok || !in_time) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
                ok && in_time ? "PASS" : "FAIL", criterion, what.c_str(), secs,
                budget);
}

CostProfile P(std::initializer_list<std::uint64_t> xs) {
    CostProfile p;
    for (std::uint64_t x : xs) p.c.push_back(ExtNat(x));
    return p;
}

std::string fixture_path(const char* name) {
    return std::string(MWR_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool frontier_is(const SolveResult& res, const Game& g, const char* name,
                 std::vector<CostProfile> want) {
    return frontier(res, g.find_vertex(name)) == want;
}

// ---- criterion 1: exact reproduction of the published value table --------
void criterion1() {
    Timer t;
    Game g = load_game(fixture_path("g2.game")).game;
    SolveResult lex = solve(g, Order::Lexicographic);
    SolveResult comp = solve(g, Order::Componentwise);
    bool ok = true;
    ok &= frontier_is(lex, g, "v0", {P({8, 8})});
    ok &= frontier_is(lex, g, "v1", {P({4, 6})});
    ok &= frontier_is(lex, g, "v2", {P({4, 6})});
    ok &= frontier_is(lex, g, "v3", {P({4, 4})});
    ok &= frontier_is(lex, g, "v4", {P({3, 5})});
    ok &= frontier_is(lex, g, "v5", {P({3, 3})});
    ok &= frontier_is(lex, g, "v6", {P({1, 1})});
    ok &= frontier_is(lex, g, "v7", {P({1, 1})});
    ok &= frontier_is(lex, g, "v8", {P({2, 2})});
    ok &= frontier_is(lex, g, "v9", {P({0, 0})});
    ok &= frontier_is(lex, g, "v10", {P({1, 1})});
    ok &= frontier_is(comp, g, "v0", {P({8, 8})});
    ok &= frontier_is(comp, g, "v1", {P({4, 6}), P({6, 4})});
    ok &= frontier_is(comp, g, "v2", {P({4, 6}), P({6, 4})});
    ok &= frontier_is(comp, g, "v3", {P({4, 4})});
    ok &= frontier_is(comp, g, "v4", {P({3, 5}), P({5, 3})});
    ok &= frontier_is(comp, g, "v5", {P({3, 3})});
    ok &= frontier_is(comp, g, "v6", {P({1, 1})});
    ok &= frontier_is(comp, g, "v7", {P({1, 1})});
    ok &= frontier_is(comp, g, "v8", {P({2, 2})});
    ok &= frontier_is(comp, g, "v9", {P({0, 0})});
    ok &= frontier_is(comp, g, "v10", {P({1, 1})});
    ok &= lex.k_star == 4 && lex.iterations == 5;
    ok &= comp.k_star == 4 && comp.iterations == 5;
    ok &= emit_solve(g, comp, Format::Human) ==
          slurp(fixture_path("table1_comp.txt"));
    ok &= emit_solve(g, lex, Format::Human) ==
          slurp(fixture_path("table1_lex.txt"));
    report(1, ok, "value table of the running example", t.seconds(), 1);
}

// ---- criterion 2: the memory-requirement witness -------------------------
void criterion2() {
    Timer t;
    Game g = load_game(fixture_path("g2_restricted.game")).game;
    int v0 = g.find_vertex("v0");
    bool ok = true;

    bool some_positional = false;
    for (const auto& [strat, ensured] :
         enumerate_positional(g, v0, Order::Componentwise))
        if (cw_leq(ensured, P({8, 8}))) some_positional = true;
    ok &= !some_positional;

    SolveResult res = solve(g, Order::Componentwise);
    ParetoStrategy s(g, res, v0, P({8, 8}));
    VerificationReport rep = verify_strategy(g, s.as_decide(), v0, P({8, 8}),
                                             Order::Componentwise,
                                             g.num_vertices());
    ok &= rep.pass && rep.worst == P({8, 8});
    report(2, ok, "memory beats every positional strategy", t.seconds(), 1);
}

// ---- criterion 3: permissiveness figures ---------------------------------
void criterion3() {
    Timer t;
    ParsedGame pg = load_game(fixture_path("fig4.game"));
    QuantGame qg = pg.quant();
    int v0 = pg.game.find_vertex("v0");
    bool ok = true;
    ok &= mev2(qg, v0) == P({6, 12});
    ok &= mev3(qg, v0) == P({2, 16});
    std::vector<CostProfile> front = mev1(qg, v0);
    auto has = [&](const CostProfile& q) {
        for (const CostProfile& x : front)
            if (x == q) return true;
        return false;
    };
    ok &= has(P({6, 12})) && has(P({16, 2}));
    MultiStrategy ms = read_multistrategy(pg.game, v0,
                                          slurp(fixture_path("fig4.mstrat")));
    MultiEval ev = eval_multistrategy(qg, ms, v0);
    ok &= ev.winning && ev.pair == P({6, 12});
    report(3, ok, "penalty-game optimal values and evaluation", t.seconds(), 5);
}

// ---- criteria 4+6+7: oracle agreement, strategies, invariants ------------
void criteria467() {
    Timer t;
    bool agree = true, strategies = true, invariants = true;
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 500; ++i) {
        RandomSpec spec;
        spec.vertices = 8;
        spec.dim = 1 + static_cast<int>(rng() % 3);
        spec.max_weight = 4;
        ParsedGame pg = random_game(rng(), spec);
        const Game& g = pg.game;
        int depth = g.num_vertices();
        int v0 = 0;

        SolveResult comp = solve(g, Order::Componentwise);
        SolveResult lex = solve(g, Order::Lexicographic);
        try {
            check_result_invariants(g, comp);
            check_result_invariants(g, lex);
        } catch (const std::exception&) {
            invariants = false;
        }
        for (int v = 0; v < g.num_vertices() && agree; ++v) {
            if (frontier(comp, v) !=
                brute_frontier(g, v, Order::Componentwise, depth))
                agree = false;
            if (frontier(lex, v) !=
                brute_frontier(g, v, Order::Lexicographic, depth))
                agree = false;
        }

        // Profiles around the frontier, plus a few random ones.
        std::vector<CostProfile> samples;
        for (const CostProfile& c : frontier(comp, v0)) {
            if (!c.is_finite()) continue;
            samples.push_back(c);
            CostProfile bump = c;
            for (auto& x : bump.c) x = x + ExtNat(1);
            samples.push_back(bump);
            for (int k = 0; k < g.dim(); ++k) {
                if (c[k].finite() == 0) continue;
                CostProfile down = c;
                down.c[static_cast<std::size_t>(k)] =
                    ExtNat(c[k].finite() - 1);
                samples.push_back(down);
            }
        }
        for (int s = 0; s < 3; ++s) {
            CostProfile r;
            for (int k = 0; k < g.dim(); ++k)
                r.c.push_back(ExtNat(rng() % (4 * g.num_vertices())));
            samples.push_back(r);
        }
        for (const CostProfile& x : samples) {
            bool a = ensures(comp, v0, x);
            bool b = ce_comp_search(g, v0, x);
            bool c = brute_ce(g, v0, x, Order::Componentwise, depth);
            if (a != b || b != c) agree = false;
        }

        // Criterion 6 on the same corpus: synthesis is sound and tight.
        for (const CostProfile& c : frontier(comp, v0)) {
            if (!c.is_finite()) continue;
            ParetoStrategy s(g, comp, v0, c);
            if (!verify_strategy(g, s.as_decide(), v0, c,
                                 Order::Componentwise, depth)
                     .pass)
                strategies = false;
            for (int k = 0; k < g.dim(); ++k) {
                if (c[k].finite() == 0) continue;
                CostProfile down = c;
                down.c[static_cast<std::size_t>(k)] =
                    ExtNat(c[k].finite() - 1);
                if (ce_comp_search(g, v0, down)) strategies = false;
            }
        }
        // Positional lexicographic optimality from every finite vertex.
        PositionalStrategy pos = synth_lex_positional(g, lex);
        for (int v = 0; v < g.num_vertices(); ++v) {
            const CostProfile& val = frontier(lex, v).front();
            if (!val.is_finite()) continue;
            if (!verify_strategy(g, pos.as_decide(), v, val,
                                 Order::Lexicographic, depth)
                     .pass)
                strategies = false;
        }
    }
    double secs = t.seconds();
    report(4, agree, "solver vs oracle on 500 random games", secs, 120);
    report(6, strategies, "strategy soundness and tightness", secs, 120);
    report(7, invariants, "structural invariants on the same corpus", secs,
           120);
}

// ---- criterion 5: the two reduction cross-checks -------------------------
void criterion5() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint64_t> values(rng() % 9);
        std::uint64_t total = 0;
        for (auto& a : values) {
            a = rng() % 7;
            total += a;
        }
        std::uint64_t threshold = rng() % (total + 3);
        QssInstance inst = qss_to_game(values, threshold);
        if (ce_comp(inst.game, inst.v0, inst.bound) !=
            brute_qss(values, threshold))
            ok = false;
    }
    for (int i = 0; i < 100; ++i) {
        RandomSpec spec;
        spec.vertices = 6;
        spec.dim = 2;
        spec.max_weight = 3;
        ParsedGame pg = random_game(rng(), spec);
        const Game& g = pg.game;
        QuantGame folded = twodim_to_penalty_game(g);
        SolveResult comp = solve(g, Order::Componentwise);
        std::vector<CostProfile> samples;
        for (const CostProfile& c : frontier(comp, 0)) {
            if (!c.is_finite()) continue;
            samples.push_back(c);
            for (int k = 0; k < 2; ++k) {
                if (c[k].finite() == 0) continue;
                CostProfile down = c;
                down.c[static_cast<std::size_t>(k)] =
                    ExtNat(c[k].finite() - 1);
                samples.push_back(down);
            }
        }
        for (int s = 0; s < 2; ++s)
            samples.push_back(P({rng() % 20, rng() % 20}));
        for (const CostProfile& x : samples) {
            bool direct = ensures(comp, 0, x);
            bool via = mce1(folded, 0, x[0].finite(), x[1].finite());
            if (direct != via) ok = false;
        }
    }
    report(5, ok, "subset-sum and edge-folding reductions", t.seconds(), 120);
}

// ---- criterion 8: large-instance smoke benchmark -------------------------
void criterion8() {
    Timer t;
    std::mt19937_64 rng(4242);
    Game g(5);
    const int n = 10000;
    for (int v = 0; v < n; ++v)
        g.add_vertex("n" + std::to_string(v),
                     rng() % 2 ? Player::P1 : Player::P2, rng() % 20 == 0);
    for (int v = 0; v < n; ++v) {
        int deg = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < deg; ++e) {
            CostProfile w;
            for (int k = 0; k < 5; ++k) w.c.push_back(ExtNat(rng() % 5));
            g.add_edge(v, static_cast<int>(rng() % n), std::move(w));
        }
    }
    SolveResult res = solve(g, Order::Lexicographic);
    bool ok = res.iterations <= n + 1;
    report(8, ok, "lexicographic solve of a 10000-vertex game", t.seconds(),
           10);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria467();
    criterion5();
    criterion8();
    if (failures == 0) std::printf("all acceptance criteria satisfied\n");
    return failures == 0 ? 0 : 1;
}
