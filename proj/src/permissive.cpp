#include "mwr/permissive.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace mwr {

QuantGame::QuantGame(Game g, std::vector<std::uint64_t> pens)
    : game(std::move(g)), penalties(std::move(pens)) {
    if (game.dim() != 1)
        throw std::invalid_argument("penalty games are single-weighted");
    if (penalties.size() != static_cast<std::size_t>(game.num_edges()))
        throw std::invalid_argument("one penalty per edge required");
    for (int e = 0; e < game.num_edges(); ++e) {
        const Edge& edge = game.edge(e);
        if (game.owner(edge.src) == Player::P2 &&
            penalties[static_cast<std::size_t>(e)] != 0) {
            warnings.push_back("penalty on adversary edge " +
                               game.vertex(edge.src).name + " -> " +
                               game.vertex(edge.dst).name +
                               " ignored (treated as 0)");
            penalties[static_cast<std::size_t>(e)] = 0;
        }
    }
}

int default_degree_cap() {
    if (const char* env = std::getenv("MWR_DEGREE_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0 && cap <= 30) return cap;
    }
    return 16;
}

namespace {

CostProfile pair_in(ExtendMode mode, std::uint64_t cost, std::uint64_t pen) {
    if (mode == ExtendMode::CostPenalty)
        return CostProfile{ExtNat(cost), ExtNat(pen)};
    return CostProfile{ExtNat(pen), ExtNat(cost)};
}

std::uint64_t edge_cost(const QuantGame& qg, int e) {
    return qg.game.edge(e).weight[0].finite();
}

}  // namespace

ExtendedGame build_extended(const QuantGame& qg, ExtendMode mode,
                            int degree_cap) {
    const Game& g = qg.game;
    ExtendedGame eg{Game(2), mode, {}, {}};
    eg.fwd.resize(static_cast<std::size_t>(g.num_vertices()));
    for (const Vertex& v : g.vertices()) {
        eg.fwd[static_cast<std::size_t>(v.id)] =
            eg.game.add_vertex(v.name, v.owner, v.is_target);
        eg.origins.push_back(ExtendedGame::Origin{v.id, false, {}});
    }
    for (const Vertex& v : g.vertices()) {
        const std::vector<int>& edges = g.out(v.id);
        if (v.owner == Player::P2) {
            for (int e : edges)
                eg.game.add_edge(eg.fwd[static_cast<std::size_t>(v.id)],
                                 eg.fwd[static_cast<std::size_t>(g.edge(e).dst)],
                                 pair_in(mode, edge_cost(qg, e), 0));
            continue;
        }
        int k = static_cast<int>(edges.size());
        if (k > degree_cap)
            throw std::runtime_error("out-degree " + std::to_string(k) +
                                     " of " + v.name +
                                     " exceeds the subset-expansion cap");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> allowed_edges;
            std::uint64_t blocked_pen = 0;
            for (int i = 0; i < k; ++i) {
                if (mask & (1u << i))
                    allowed_edges.push_back(edges[static_cast<std::size_t>(i)]);
                else
                    blocked_pen +=
                        qg.penalties[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])];
            }
            std::vector<int> subset;
            for (int e : allowed_edges) subset.push_back(g.edge(e).dst);
            std::sort(subset.begin(), subset.end());
            std::string name = "(" + v.name + ",{";
            for (std::size_t i = 0; i < subset.size(); ++i) {
                if (i) name += ",";
                name += g.vertex(subset[i]).name;
            }
            name += "})";
            // The adversary resolves which allowed edge is taken.
            int cv = eg.game.add_vertex(name, Player::P2, false);
            eg.origins.push_back(ExtendedGame::Origin{v.id, true, subset});
            eg.game.add_edge(eg.fwd[static_cast<std::size_t>(v.id)], cv,
                             pair_in(mode, 0, blocked_pen));
            for (int e : allowed_edges)
                eg.game.add_edge(cv,
                                 eg.fwd[static_cast<std::size_t>(g.edge(e).dst)],
                                 pair_in(mode, edge_cost(qg, e), 0));
        }
    }
    return eg;
}

namespace {

bool ensured_on(const ExtendedGame& eg, int v0, const CostProfile& pair) {
    SolveResult res = solve(eg.game, Order::Componentwise);
    return ensures(res, eg.fwd[static_cast<std::size_t>(v0)], pair);
}

}  // namespace

bool mce1(const QuantGame& qg, int v0, std::uint64_t c, std::uint64_t p) {
    ExtendedGame eg = build_extended(qg, ExtendMode::CostPenalty);
    return ensured_on(eg, v0, CostProfile{ExtNat(c), ExtNat(p)});
}

namespace {

bool mce_lex(const QuantGame& qg, int v0, ExtendMode mode,
             const CostProfile& pair) {
    ExtendedGame eg = build_extended(qg, mode);
    SolveResult res = solve(eg.game, Order::Lexicographic);
    const CostProfile& val =
        frontier(res, eg.fwd[static_cast<std::size_t>(v0)]).front();
    return lex_cmp(val, pair) != std::strong_ordering::greater;
}

}  // namespace

bool mce2(const QuantGame& qg, int v0, std::uint64_t c, std::uint64_t p) {
    return mce_lex(qg, v0, ExtendMode::CostPenalty,
                   CostProfile{ExtNat(c), ExtNat(p)});
}

bool mce3(const QuantGame& qg, int v0, std::uint64_t p, std::uint64_t c) {
    return mce_lex(qg, v0, ExtendMode::PenaltyCost,
                   CostProfile{ExtNat(p), ExtNat(c)});
}

std::vector<CostProfile> mev1(const QuantGame& qg, int v0) {
    ExtendedGame eg = build_extended(qg, ExtendMode::CostPenalty);
    SolveResult res = solve(eg.game, Order::Componentwise);
    return frontier(res, eg.fwd[static_cast<std::size_t>(v0)]);
}

std::pair<std::uint64_t, std::uint64_t> value_bounds(const QuantGame& qg,
                                                     ExtendMode mode) {
    const Game& g = qg.game;
    std::uint64_t steps = 2 * static_cast<std::uint64_t>(g.num_vertices());
    std::uint64_t max_cost = 0;
    for (int e = 0; e < g.num_edges(); ++e)
        max_cost = std::max(max_cost, edge_cost(qg, e));
    std::uint64_t max_pen_sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::uint64_t sum = 0;
        for (int e : g.out(v)) sum += qg.penalties[static_cast<std::size_t>(e)];
        max_pen_sum = std::max(max_pen_sum, sum);
    }
    std::uint64_t b_cost = steps * max_cost;
    std::uint64_t b_pen = steps * max_pen_sum;
    if (mode == ExtendMode::CostPenalty) return {b_cost, b_pen};
    return {b_pen, b_cost};
}

namespace {

// Least value in [0, hi] satisfying pred, assuming pred is monotone and
// pred(hi) holds.
std::uint64_t least_satisfying(std::uint64_t hi,
                               const std::function<bool(std::uint64_t)>& pred) {
    std::uint64_t lo = 0;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

CostProfile mev_lex(const QuantGame& qg, int v0, ExtendMode mode) {
    ExtendedGame eg = build_extended(qg, mode);
    SolveResult res = solve(eg.game, Order::Lexicographic);
    CostProfile direct =
        frontier(res, eg.fwd[static_cast<std::size_t>(v0)]).front();

    // Independent route: nested binary searches over the decision procedure
    // inside the a-priori value bounds.
    auto [b1, b2] = value_bounds(qg, mode);
    auto decide = [&](std::uint64_t a, std::uint64_t b) {
        return mode == ExtendMode::CostPenalty ? mce2(qg, v0, a, b)
                                               : mce3(qg, v0, a, b);
    };
    CostProfile searched = CostProfile::top(2);
    if (decide(b1, b2)) {
        std::uint64_t first =
            least_satisfying(b1, [&](std::uint64_t a) { return decide(a, b2); });
        std::uint64_t second = least_satisfying(
            b2, [&](std::uint64_t b) { return decide(first, b); });
        searched = CostProfile{ExtNat(first), ExtNat(second)};
    }
    if (!(searched == direct))
        throw std::logic_error("optimal-value cross-check failed: " +
                               direct.str() + " vs " + searched.str());
    return direct;
}

}  // namespace

CostProfile mev2(const QuantGame& qg, int v0) {
    return mev_lex(qg, v0, ExtendMode::CostPenalty);
}

CostProfile mev3(const QuantGame& qg, int v0) {
    return mev_lex(qg, v0, ExtendMode::PenaltyCost);
}

MultiStrategy MultiStrategy::positional(int start,
                                        std::map<int, std::vector<int>> subsets) {
    MultiStrategy ms;
    ms.start_ = start;
    ms.positional_ = true;
    ms.pos_ = std::move(subsets);
    return ms;
}

MultiStrategy MultiStrategy::table(
    int start,
    std::map<std::pair<int, std::pair<std::uint64_t, std::uint64_t>>,
             std::vector<int>>
        entries) {
    MultiStrategy ms;
    ms.start_ = start;
    ms.table_ = std::move(entries);
    return ms;
}

std::vector<int> MultiStrategy::decide(int v, std::uint64_t cost,
                                       std::uint64_t penalty) const {
    if (positional_) {
        auto it = pos_.find(v);
        return it == pos_.end() ? std::vector<int>{} : it->second;
    }
    auto it = table_.find({v, {cost, penalty}});
    return it == table_.end() ? std::vector<int>{} : it->second;
}

std::vector<std::tuple<int, std::uint64_t, std::uint64_t, std::vector<int>>>
MultiStrategy::entries() const {
    std::vector<std::tuple<int, std::uint64_t, std::uint64_t, std::vector<int>>>
        out;
    if (positional_) {
        for (const auto& [v, subset] : pos_) out.emplace_back(v, 0, 0, subset);
    } else {
        for (const auto& [key, subset] : table_)
            out.emplace_back(key.first, key.second.first, key.second.second,
                             subset);
    }
    return out;
}

MultiStrategy extract_multistrategy(const QuantGame& qg,
                                    const ExtendedGame& eg,
                                    const SolveResult& result, int v0,
                                    const CostProfile& pair) {
    int start_ext = eg.fwd[static_cast<std::size_t>(v0)];
    ParetoStrategy sigma(eg.game, result, start_ext, pair);

    std::map<std::pair<int, std::pair<std::uint64_t, std::uint64_t>>,
             std::vector<int>>
        table;
    // Deep enough to cover every state the depth-2|V| evaluation can visit.
    int max_depth = 4 * qg.game.num_vertices() + 2;
    std::map<std::pair<int, std::pair<std::uint64_t, std::uint64_t>>, int>
        seen_depth;

    auto cp_of = [&](const CostProfile& acc) {
        std::uint64_t a = acc[0].finite(), b = acc[1].finite();
        if (eg.mode == ExtendMode::PenaltyCost) std::swap(a, b);
        return std::make_pair(a, b);  // (cost, penalty)
    };

    std::function<void(int, const CostProfile&, int)> walk =
        [&](int v, const CostProfile& acc, int depth) {
            if (eg.game.is_target(v) || depth == 0) return;
            auto key = std::make_pair(v, cp_of(acc));
            auto it = seen_depth.find(key);
            if (it != seen_depth.end() && it->second >= depth) return;
            seen_depth[key] = depth;
            if (eg.game.owner(v) == Player::P1) {
                int cv = sigma.next(v, acc);
                const ExtendedGame::Origin& o =
                    eg.origins[static_cast<std::size_t>(cv)];
                if (o.is_choice)
                    table[{o.origin, cp_of(acc)}] = o.subset;
                for (int e : eg.game.out(v)) {
                    const Edge& edge = eg.game.edge(e);
                    if (edge.dst == cv) {
                        walk(edge.dst, acc + edge.weight, depth - 1);
                        break;
                    }
                }
            } else {
                for (int e : eg.game.out(v)) {
                    const Edge& edge = eg.game.edge(e);
                    walk(edge.dst, acc + edge.weight, depth - 1);
                }
            }
        };
    walk(start_ext, CostProfile::zero(2), max_depth);
    return MultiStrategy::table(v0, std::move(table));
}

namespace {

struct EvalCtx {
    const QuantGame& qg;
    const MultiStrategy& ms;
    struct Out {
        bool winning;
        std::uint64_t worst_cost;  // over target-reaching plays
        std::uint64_t worst_pen;   // over all explored plays
    };
    std::map<std::tuple<int, std::uint64_t, std::uint64_t, int>, Out> memo;

    Out run(int v, std::uint64_t cost, std::uint64_t pen, int depth) {
        const Game& g = qg.game;
        if (g.is_target(v)) return {true, cost, pen};
        if (depth == 0) return {false, 0, pen};
        auto key = std::make_tuple(v, cost, pen, depth);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Out merged{true, 0, 0};
        if (g.owner(v) == Player::P1) {
            std::vector<int> subset = ms.decide(v, cost, pen);
            std::uint64_t blocked = 0;
            std::vector<int> taken;
            for (int e : g.out(v)) {
                const Edge& edge = g.edge(e);
                if (std::find(subset.begin(), subset.end(), edge.dst) !=
                    subset.end())
                    taken.push_back(e);
                else
                    blocked += qg.penalties[static_cast<std::size_t>(e)];
            }
            if (taken.empty()) {
                merged = {false, 0, pen};  // no decision: cannot be winning
            } else {
                std::uint64_t pen2 = pen + blocked;
                bool first = true;
                for (int e : taken) {
                    const Edge& edge = g.edge(e);
                    Out sub = run(edge.dst, cost + edge_cost(qg, e), pen2,
                                  depth - 1);
                    merge(merged, sub, first);
                    first = false;
                }
            }
        } else {
            bool first = true;
            for (int e : g.out(v)) {
                const Edge& edge = g.edge(e);
                Out sub = run(edge.dst, cost + edge_cost(qg, e), pen, depth - 1);
                merge(merged, sub, first);
                first = false;
            }
        }
        memo.emplace(key, merged);
        return merged;
    }

    static void merge(Out& acc, const Out& sub, bool first) {
        if (first) {
            acc = sub;
            return;
        }
        acc.winning = acc.winning && sub.winning;
        acc.worst_cost = std::max(acc.worst_cost, sub.worst_cost);
        acc.worst_pen = std::max(acc.worst_pen, sub.worst_pen);
    }
};

}  // namespace

MultiEval eval_multistrategy(const QuantGame& qg, const MultiStrategy& ms,
                             int v0) {
    EvalCtx ctx{qg, ms, {}};
    EvalCtx::Out out = ctx.run(v0, 0, 0, 2 * qg.game.num_vertices());
    MultiEval ev;
    ev.winning = out.winning;
    ev.pair = CostProfile{out.winning ? ExtNat(out.worst_cost) : ExtNat::inf(),
                          ExtNat(out.worst_pen)};
    return ev;
}

QuantGame twodim_to_penalty_game(const Game& g2) {
    if (g2.dim() != 2)
        throw std::invalid_argument("expected a two-weighted game");
    Game g(1);
    std::vector<std::uint64_t> pens;
    for (const Vertex& v : g2.vertices())
        g.add_vertex(v.name, v.owner, v.is_target);
    int sink = g.add_vertex("bot", Player::P1, false);
    for (int e = 0; e < g2.num_edges(); ++e) {
        const Edge& edge = g2.edge(e);
        int relay = g.add_vertex("e" + std::to_string(e), Player::P1);
        g.add_edge(edge.src, relay, CostProfile{edge.weight[0]});
        pens.push_back(0);
        g.add_edge(relay, edge.dst, CostProfile{ExtNat(0)});
        pens.push_back(0);
        g.add_edge(relay, sink, CostProfile{ExtNat(0)});
        pens.push_back(edge.weight[1].finite());
    }
    g.add_edge(sink, sink, CostProfile{ExtNat(0)});
    pens.push_back(0);
    if (g2.initial()) g.set_initial(*g2.initial());
    return QuantGame(std::move(g), std::move(pens));
}

}  // namespace mwr
