#include "mwr/strategy.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mwr {

ParetoStrategy::ParetoStrategy(const Game& game, const SolveResult& result,
                               int start, CostProfile c)
    : game_(&game), result_(&result), start_(start), budget_(std::move(c)) {
    if (result.order != Order::Componentwise)
        throw std::invalid_argument("Pareto strategy needs a componentwise result");
    if (!budget_.is_finite())
        throw std::invalid_argument("target profile contains infinity");
    const std::vector<CostProfile>& front = frontier(result, start);
    if (std::find(front.begin(), front.end(), budget_) == front.end())
        throw std::invalid_argument("target profile is not on the frontier of " +
                                    game.vertex(start).name);
}

int ParetoStrategy::next(int v, const CostProfile& accumulated) const {
    // Affordable frontier profiles at v: both order filters applied to the
    // remaining budget (shifting both sides by the accumulated cost).
    const CostProfile* pick = nullptr;
    for (const CostProfile& x : frontier(*result_, v)) {  // lex-sorted
        if (!x.is_finite()) continue;
        CostProfile total = x + accumulated;
        if (cw_leq(total, budget_) &&
            lex_cmp(total, budget_) != std::strong_ordering::greater) {
            pick = &x;
            break;
        }
    }
    if (pick) {
        const ProfileChoiceMap& table =
            result_->choices[static_cast<std::size_t>(v)];
        auto it = table.find(*pick);
        if (it != table.end()) return it->second.successor;
    }
    // Off the tracked plays: any legal move will do; stay deterministic.
    return game_->edge(game_->out(v).front()).dst;
}

PositionalStrategy synth_lex_positional(const Game& game,
                                        const SolveResult& result) {
    if (result.order != Order::Lexicographic)
        throw std::invalid_argument("positional synthesis needs a lex result");
    PositionalStrategy strat;
    for (int v = 0; v < game.num_vertices(); ++v) {
        if (game.owner(v) != Player::P1 || game.is_target(v)) continue;
        const CostProfile& val = frontier(result, v).front();
        if (!val.is_finite()) {
            strat.unmapped.push_back(v);
            continue;
        }
        strat.moves[v] =
            result.choices[static_cast<std::size_t>(v)].at(val).successor;
    }
    return strat;
}

namespace {

struct VerifyCtx {
    const Game& game;
    const Decide& decide;
    const CostProfile& budget;
    Order order;

    struct Sub {
        bool pass;
        CostProfile worst;
        int steps;
        std::vector<int> counterexample;  // suffix starting at this vertex
    };
    std::map<std::tuple<int, int, CostProfile>, Sub,
             decltype([](const auto& a, const auto& b) {
                 if (std::get<0>(a) != std::get<0>(b))
                     return std::get<0>(a) < std::get<0>(b);
                 if (std::get<1>(a) != std::get<1>(b))
                     return std::get<1>(a) < std::get<1>(b);
                 return LexLess{}(std::get<2>(a), std::get<2>(b));
             })>
        memo;

    Sub run(int v, const CostProfile& acc, int depth) {
        auto key = std::make_tuple(v, depth, acc);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Sub sub = compute(v, acc, depth);
        memo.emplace(key, sub);
        return sub;
    }

    Sub compute(int v, const CostProfile& acc, int depth) {
        if (game.is_target(v)) {
            bool ok = leq(acc, budget, order);
            return Sub{ok, acc, 0, ok ? std::vector<int>{} : std::vector<int>{v}};
        }
        if (depth == 0)
            return Sub{false, CostProfile::top(game.dim()), 0, {v}};
        if (game.owner(v) == Player::P1) {
            int choice = decide(v, acc);
            for (int e : game.out(v)) {
                const Edge& edge = game.edge(e);
                if (edge.dst != choice) continue;
                Sub sub = run(edge.dst, acc + edge.weight, depth - 1);
                sub.steps += 1;
                if (!sub.pass) sub.counterexample.insert(sub.counterexample.begin(), v);
                return sub;
            }
            // No move: the play cannot continue under this strategy.
            return Sub{false, CostProfile::top(game.dim()), 0, {v}};
        }
        Sub merged{true, CostProfile::zero(game.dim()), 0, {}};
        bool first = true;
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            Sub sub = run(edge.dst, acc + edge.weight, depth - 1);
            if (!sub.pass && merged.pass) {
                merged.pass = false;
                merged.counterexample = sub.counterexample;
                merged.counterexample.insert(merged.counterexample.begin(), v);
            }
            merged.worst = first ? sub.worst
                           : order == Order::Componentwise
                               ? cw_max(merged.worst, sub.worst)
                           : lex_cmp(sub.worst, merged.worst) ==
                                   std::strong_ordering::greater
                               ? sub.worst
                               : merged.worst;
            merged.steps = std::max(merged.steps, sub.steps + 1);
            first = false;
        }
        return merged;
    }
};

}  // namespace

VerificationReport verify_strategy(const Game& game, const Decide& decide,
                                   int start, const CostProfile& c,
                                   Order order, int depth) {
    VerifyCtx ctx{game, decide, c, order, {}};
    VerifyCtx::Sub sub = ctx.run(start, CostProfile::zero(game.dim()), depth);
    VerificationReport rep;
    rep.pass = sub.pass;
    rep.worst = sub.worst;
    rep.max_steps = sub.steps;
    rep.counterexample = std::move(sub.counterexample);
    return rep;
}

namespace {

// Worst outcome of a fixed positional strategy against a free adversary.
CostProfile ensured_by(const Game& game, const std::map<int, int>& moves,
                       int v, int depth, Order order) {
    if (game.is_target(v)) return CostProfile::zero(game.dim());
    if (depth == 0) return CostProfile::top(game.dim());
    if (game.owner(v) == Player::P1) {
        auto it = moves.find(v);
        if (it == moves.end()) return CostProfile::top(game.dim());
        for (int e : game.out(v)) {
            const Edge& edge = game.edge(e);
            if (edge.dst == it->second)
                return ensured_by(game, moves, edge.dst, depth - 1, order) +
                       edge.weight;
        }
        return CostProfile::top(game.dim());
    }
    CostProfile worst;
    bool first = true;
    for (int e : game.out(v)) {
        const Edge& edge = game.edge(e);
        CostProfile out =
            ensured_by(game, moves, edge.dst, depth - 1, order) + edge.weight;
        if (first) {
            worst = out;
            first = false;
        } else if (order == Order::Componentwise) {
            worst = cw_max(worst, out);
        } else if (lex_cmp(out, worst) == std::strong_ordering::greater) {
            worst = out;
        }
    }
    return worst;
}

}  // namespace

std::vector<std::pair<PositionalStrategy, CostProfile>> enumerate_positional(
    const Game& game, int v0, Order order, std::uint64_t cap) {
    std::vector<int> decision_vertices;
    std::uint64_t count = 1;
    for (int v = 0; v < game.num_vertices(); ++v) {
        if (game.owner(v) != Player::P1 || game.is_target(v)) continue;
        decision_vertices.push_back(v);
        count *= static_cast<std::uint64_t>(game.out(v).size());
        if (count > cap)
            throw std::runtime_error("positional strategy count exceeds cap");
    }
    std::vector<std::pair<PositionalStrategy, CostProfile>> out;
    std::vector<std::size_t> pick(decision_vertices.size(), 0);
    while (true) {
        PositionalStrategy strat;
        for (std::size_t i = 0; i < decision_vertices.size(); ++i) {
            int v = decision_vertices[i];
            strat.moves[v] = game.edge(game.out(v)[pick[i]]).dst;
        }
        out.emplace_back(strat, ensured_by(game, strat.moves, v0,
                                           game.num_vertices(), order));
        // Odometer over successor picks.
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < game.out(decision_vertices[i]).size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

}  // namespace mwr
