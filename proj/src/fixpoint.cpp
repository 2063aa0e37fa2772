#include "mwr/fixpoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwr {

AntichainState init_state(const Game& game) {
    AntichainState state(static_cast<std::size_t>(game.num_vertices()));
    for (int v = 0; v < game.num_vertices(); ++v)
        state[static_cast<std::size_t>(v)] = {game.is_target(v)
                                                  ? CostProfile::zero(game.dim())
                                                  : CostProfile::top(game.dim())};
    return state;
}

static std::vector<CostProfile> step_vertex_comp(const Game& game, int v,
                                                 const AntichainState& cur) {
    const std::vector<int>& edges = game.out(v);
    bool first = true;
    UpSet acc = UpSet::top(game.dim());
    for (int e : edges) {
        const Edge& edge = game.edge(e);
        UpSet moved = translate(UpSet::from(cur[static_cast<std::size_t>(edge.dst)]),
                                edge.weight);
        if (first) {
            acc = moved;
            first = false;
        } else if (game.owner(v) == Player::P1) {
            acc = unite(acc, moved);
        } else {
            acc = intersect(acc, moved);
        }
    }
    return acc.generators();
}

static std::vector<CostProfile> step_vertex_lex(const Game& game, int v,
                                                const AntichainState& cur) {
    bool first = true;
    CostProfile best;
    for (int e : game.out(v)) {
        const Edge& edge = game.edge(e);
        CostProfile cand = cur[static_cast<std::size_t>(edge.dst)].front() + edge.weight;
        if (first) {
            best = cand;
            first = false;
        } else if (game.owner(v) == Player::P1) {
            if (lex_cmp(cand, best) == std::strong_ordering::less) best = cand;
        } else {
            if (lex_cmp(cand, best) == std::strong_ordering::greater) best = cand;
        }
    }
    return {best};
}

AntichainState step(const Game& game, const AntichainState& current,
                    Order order) {
    if (static_cast<int>(current.size()) != game.num_vertices())
        throw std::invalid_argument("state size does not match game");
    AntichainState next(current.size());
    for (int v = 0; v < game.num_vertices(); ++v) {
        std::size_t vi = static_cast<std::size_t>(v);
        if (game.is_target(v)) {
            next[vi] = {CostProfile::zero(game.dim())};
        } else if (order == Order::Componentwise) {
            next[vi] = step_vertex_comp(game, v, current);
        } else {
            next[vi] = step_vertex_lex(game, v, current);
        }
    }
    return next;
}

// old-state upward closure must be contained in the new one.
static void assert_monotone(const AntichainState& before,
                            const AntichainState& after, Order order) {
    for (std::size_t v = 0; v < before.size(); ++v) {
        for (const CostProfile& g : before[v]) {
            bool covered = false;
            for (const CostProfile& h : after[v]) {
                if (order == Order::Componentwise ? cw_leq(h, g)
                                                  : lex_cmp(h, g) !=
                                                        std::strong_ordering::greater) {
                    covered = true;
                    break;
                }
            }
            if (!covered)
                throw std::logic_error("fixpoint iteration lost ensured profiles");
        }
    }
}

// Find which successor produced the newly appeared profile x at P1 vertex v:
// earliest successor in input order, then lex-least residual.
static ChoiceEntry find_witness(const Game& game, int v, const CostProfile& x,
                                const AntichainState& snapshot) {
    for (int e : game.out(v)) {
        const Edge& edge = game.edge(e);
        // Snapshot antichains are lex-sorted, so the first match is lex-least.
        for (const CostProfile& r : snapshot[static_cast<std::size_t>(edge.dst)]) {
            if (r + edge.weight == x) return ChoiceEntry{edge.dst, r};
        }
    }
    throw std::logic_error("no witness for new profile " + x.str() +
                           " at vertex " + game.vertex(v).name);
}

SolveResult solve(const Game& game, Order order) {
    {
        auto diags = game.validate();
        if (!diags.empty())
            throw std::invalid_argument("invalid game: " + diags.front());
    }
    const int n = game.num_vertices();
    SolveResult res;
    res.order = order;
    res.dim = game.dim();
    res.choices.resize(static_cast<std::size_t>(n));
    res.first_occurrence.resize(static_cast<std::size_t>(n));

    AntichainState state = init_state(game);
    for (int v = 0; v < n; ++v)
        for (const CostProfile& g : state[static_cast<std::size_t>(v)])
            res.first_occurrence[static_cast<std::size_t>(v)][g] = 0;

    int k = 0;
    while (true) {
        AntichainState next = step(game, state, order);
        assert_monotone(state, next, order);

        std::vector<ProfileChoiceMap> next_choices(static_cast<std::size_t>(n));
        std::vector<ProfileIterMap> next_first(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::size_t vi = static_cast<std::size_t>(v);
            if (order == Order::Lexicographic && next[vi].size() != 1)
                throw std::logic_error("lexicographic antichain not a singleton");
            bool p1_decides = game.owner(v) == Player::P1 && !game.is_target(v);
            for (const CostProfile& x : next[vi]) {
                auto seen = res.first_occurrence[vi].find(x);
                if (seen != res.first_occurrence[vi].end()) {
                    next_first[vi][x] = seen->second;
                    if (p1_decides) {
                        auto old = res.choices[vi].find(x);
                        if (old != res.choices[vi].end())
                            next_choices[vi][x] = old->second;
                    }
                } else {
                    next_first[vi][x] = k + 1;
                    if (p1_decides && x.is_finite())
                        next_choices[vi][x] = find_witness(game, v, x, state);
                }
            }
        }
        res.choices = std::move(next_choices);
        res.first_occurrence = std::move(next_first);

        ++k;
        bool stable = next == state;
        state = std::move(next);
        if (stable) {
            res.k_star = k - 1;
            res.iterations = k;
            break;
        }
        if (k > n + 1)
            throw std::logic_error("fixpoint did not stabilize within |V|+1 steps");
    }
    res.frontiers = std::move(state);
    check_result_invariants(game, res);
    return res;
}

const std::vector<CostProfile>& frontier(const SolveResult& result, int v) {
    if (v < 0 || v >= static_cast<int>(result.frontiers.size()))
        throw std::out_of_range("unknown vertex in frontier()");
    return result.frontiers[static_cast<std::size_t>(v)];
}

bool ensures(const SolveResult& result, int v, const CostProfile& x) {
    for (const CostProfile& g : frontier(result, v))
        if (result.order == Order::Componentwise
                ? cw_leq(g, x)
                : lex_cmp(g, x) != std::strong_ordering::greater)
            return true;
    return false;
}

void check_result_invariants(const Game& game, const SolveResult& result) {
    const int n = game.num_vertices();
    if (result.iterations > n + 1)
        throw std::logic_error("too many iterations recorded");
    for (int v = 0; v < n; ++v) {
        std::size_t vi = static_cast<std::size_t>(v);
        const std::vector<CostProfile>& front = result.frontiers[vi];
        if (game.is_target(v) &&
            !(front.size() == 1 && front.front() == CostProfile::zero(game.dim())))
            throw std::logic_error("target frontier is not {0}");
        if (result.order == Order::Lexicographic && front.size() != 1)
            throw std::logic_error("lexicographic frontier not a singleton");
        for (const CostProfile& g : front) {
            if (!g.is_finite() && !g.is_top())
                throw std::logic_error("mixed finite/infinite frontier profile");
            if (!result.first_occurrence[vi].count(g))
                throw std::logic_error("missing first-occurrence index");
        }
        if (game.owner(v) != Player::P1 || game.is_target(v)) continue;
        for (const CostProfile& g : front) {
            if (!g.is_finite()) continue;
            auto it = result.choices[vi].find(g);
            if (it == result.choices[vi].end())
                throw std::logic_error("finite frontier profile without choice");
            const ChoiceEntry& ce = it->second;
            // x = residual + w(v, successor) for the recorded edge.
            bool edge_ok = false;
            for (int e : game.out(v)) {
                const Edge& edge = game.edge(e);
                if (edge.dst == ce.successor &&
                    ce.residual + edge.weight == g) {
                    edge_ok = true;
                    break;
                }
            }
            if (!edge_ok) throw std::logic_error("inconsistent choice entry");
            const std::vector<CostProfile>& succ_front =
                result.frontiers[static_cast<std::size_t>(ce.successor)];
            if (std::find(succ_front.begin(), succ_front.end(), ce.residual) ==
                succ_front.end())
                throw std::logic_error("choice residual not a successor generator");
            int nx = result.first_occurrence[vi].at(g);
            int nr = result.first_occurrence[static_cast<std::size_t>(ce.successor)]
                         .at(ce.residual);
            if (!(nr < nx))
                throw std::logic_error("first-occurrence indices do not descend");
        }
    }
}

}  // namespace mwr
