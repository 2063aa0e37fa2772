#include "mwr/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mwr {

namespace {

// Naive minimal-elements scan, local on purpose (independent of upset.cpp).
std::vector<CostProfile> scan_minimal(const std::vector<CostProfile>& in,
                                      Order order) {
    if (order == Order::Lexicographic) {
        if (in.empty()) return {};
        CostProfile best = in.front();
        for (const CostProfile& p : in)
            if (lex_cmp(p, best) == std::strong_ordering::less) best = p;
        return {best};
    }
    std::vector<CostProfile> out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < in.size() && !drop; ++j) {
            if (i == j) continue;
            if (in[i] == in[j]) {
                drop = j < i;
            } else if (cw_leq(in[j], in[i])) {
                drop = true;
            }
        }
        if (!drop) out.push_back(in[i]);
    }
    return out;
}

struct Memo {
    const Game& game;
    Order order;
    std::map<std::pair<int, int>, std::vector<CostProfile>> table;

    const std::vector<CostProfile>& at(int v, int depth) {
        auto key = std::make_pair(v, depth);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        std::vector<CostProfile> res = compute(v, depth);
        return table.emplace(key, std::move(res)).first->second;
    }

    std::vector<CostProfile> compute(int v, int depth) {
        if (game.is_target(v)) return {CostProfile::zero(game.dim())};
        if (depth == 0) return {CostProfile::top(game.dim())};
        if (game.owner(v) == Player::P1) {
            std::vector<CostProfile> pool;
            for (int e : game.out(v)) {
                const Edge& edge = game.edge(e);
                for (const CostProfile& p : at(edge.dst, depth - 1))
                    pool.push_back(p + edge.weight);
            }
            return scan_minimal(pool, order);
        }
        // Adversary vertex: whatever the opponent does must be covered, so
        // intersect the successor guarantees.  Componentwise that is the set
        // of pairwise joins, folded one successor at a time.
        std::vector<CostProfile> acc;
        bool first = true;
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            std::vector<CostProfile> moved;
            for (const CostProfile& p : at(edge.dst, depth - 1))
                moved.push_back(p + edge.weight);
            if (first) {
                acc = std::move(moved);
                first = false;
                continue;
            }
            if (order == Order::Lexicographic) {
                if (lex_cmp(moved.front(), acc.front()) ==
                    std::strong_ordering::greater)
                    acc = std::move(moved);
            } else {
                std::vector<CostProfile> joined;
                for (const CostProfile& a : acc)
                    for (const CostProfile& b : moved)
                        joined.push_back(cw_max(a, b));
                acc = scan_minimal(joined, order);
            }
        }
        return scan_minimal(acc, order);
    }
};

}  // namespace

std::vector<CostProfile> brute_frontier(const Game& game, int v, Order order,
                                        int depth) {
    if (v < 0 || v >= game.num_vertices())
        throw std::out_of_range("unknown vertex in brute_frontier");
    Memo memo{game, order, {}};
    std::vector<CostProfile> res = memo.at(v, depth);
    std::sort(res.begin(), res.end(), LexLess{});
    return res;
}

bool brute_ce(const Game& game, int v0, const CostProfile& x, Order order,
              int depth) {
    for (const CostProfile& g : brute_frontier(game, v0, order, depth))
        if (order == Order::Componentwise
                ? cw_leq(g, x)
                : lex_cmp(g, x) != std::strong_ordering::greater)
            return true;
    return false;
}

}  // namespace mwr
