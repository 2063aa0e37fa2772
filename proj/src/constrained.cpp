#include "mwr/constrained.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace mwr {

bool ce_lex(const Game& game, int v0, const CostProfile& x) {
    if (!x.is_finite()) throw std::invalid_argument("ce_lex needs a finite profile");
    SolveResult res = solve(game, Order::Lexicographic);
    return lex_cmp(frontier(res, v0).front(), x) != std::strong_ordering::greater;
}

bool ce_comp(const Game& game, int v0, const CostProfile& x) {
    if (!x.is_finite()) throw std::invalid_argument("ce_comp needs a finite profile");
    SolveResult res = solve(game, Order::Componentwise);
    return ensures(res, v0, x);
}

namespace {

// Remaining budget after paying w, or nullopt when w does not fit.
std::optional<CostProfile> pay(const CostProfile& budget, const CostProfile& w) {
    CostProfile rest;
    rest.c.reserve(budget.c.size());
    for (std::size_t i = 0; i < budget.c.size(); ++i) {
        if (budget.c[i] < w.c[i]) return std::nullopt;
        rest.c.push_back(budget.c[i].finite() - w.c[i].finite());
    }
    return rest;
}

struct Search {
    const Game& game;
    std::map<std::tuple<int, int, CostProfile>, bool,
             decltype([](const auto& a, const auto& b) {
                 if (std::get<0>(a) != std::get<0>(b))
                     return std::get<0>(a) < std::get<0>(b);
                 if (std::get<1>(a) != std::get<1>(b))
                     return std::get<1>(a) < std::get<1>(b);
                 return LexLess{}(std::get<2>(a), std::get<2>(b));
             })>
        memo;

    bool run(int v, const CostProfile& budget, int depth) {
        if (game.is_target(v)) return true;
        if (depth == 0) return false;
        auto key = std::make_tuple(v, depth, budget);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool p1 = game.owner(v) == Player::P1;
        bool verdict = !p1;  // OR starts false, AND starts true
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            std::optional<CostProfile> rest = pay(budget, edge.weight);
            bool branch = rest && run(edge.dst, *rest, depth - 1);
            if (p1 && branch) {
                verdict = true;
                break;
            }
            if (!p1 && !branch) {
                verdict = false;
                break;
            }
        }
        memo.emplace(key, verdict);
        return verdict;
    }
};

}  // namespace

bool ce_comp_search(const Game& game, int v0, const CostProfile& x) {
    if (!x.is_finite())
        throw std::invalid_argument("ce_comp_search needs a finite profile");
    Search s{game, {}};
    return s.run(v0, x, game.num_vertices());
}

QssInstance qss_to_game(const std::vector<std::uint64_t>& values,
                        std::uint64_t threshold) {
    std::uint64_t total = std::accumulate(values.begin(), values.end(),
                                          std::uint64_t{0});
    QssInstance inst{Game(2), 0,
                     CostProfile{}, threshold > total};
    Game& g = inst.game;
    std::uint64_t spare = threshold > total ? 0 : total - threshold;
    inst.bound = CostProfile{ExtNat(threshold), ExtNat(spare)};

    int n = static_cast<int>(values.size());
    std::vector<int> chain;   // the x_k decision vertices
    for (int k = 0; k < n; ++k) {
        // 1-indexed odd positions are existential -> P1.
        Player owner = (k % 2 == 0) ? Player::P1 : Player::P2;
        chain.push_back(g.add_vertex("x" + std::to_string(k + 1), owner));
    }
    int target = g.add_vertex("y", Player::P1, true);
    g.add_edge(target, target, CostProfile::zero(2));
    for (int k = 0; k < n; ++k) {
        std::uint64_t a = values[static_cast<std::size_t>(k)];
        int take = g.add_vertex("x" + std::to_string(k + 1) + "_1", Player::P1);
        int skip = g.add_vertex("x" + std::to_string(k + 1) + "_0", Player::P1);
        // Taking the value spends it on the first component, skipping on the
        // second; the budget (T, total - T) forces the sum to land exactly.
        g.add_edge(chain[static_cast<std::size_t>(k)], take,
                   CostProfile{ExtNat(a), ExtNat(0)});
        g.add_edge(chain[static_cast<std::size_t>(k)], skip,
                   CostProfile{ExtNat(0), ExtNat(a)});
        int next = (k + 1 < n) ? chain[static_cast<std::size_t>(k + 1)] : target;
        g.add_edge(take, next, CostProfile::zero(2));
        g.add_edge(skip, next, CostProfile::zero(2));
    }
    inst.v0 = n > 0 ? chain.front() : target;
    if (inst.trivially_false) {
        // No exact sum can exist, so the budget (T, total - T) is not even
        // expressible; start from a vertex that never reaches the target.
        int dead = g.add_vertex("z", Player::P1);
        g.add_edge(dead, dead, CostProfile::zero(2));
        inst.v0 = dead;
    }
    g.set_initial(inst.v0);
    return inst;
}

namespace {

bool qss_rec(const std::vector<std::uint64_t>& values, std::size_t k,
             std::uint64_t sum, std::uint64_t threshold) {
    if (k == values.size()) return sum == threshold;
    bool exists = (k % 2 == 0);
    bool with = qss_rec(values, k + 1, sum + values[k], threshold);
    bool without = qss_rec(values, k + 1, sum, threshold);
    return exists ? (with || without) : (with && without);
}

}  // namespace

bool brute_qss(const std::vector<std::uint64_t>& values,
               std::uint64_t threshold) {
    if (values.size() > 20)
        throw std::invalid_argument("quantified subset-sum instance too large");
    return qss_rec(values, 0, 0, threshold);
}

}  // namespace mwr
