// Command-line front end: solving, checking, synthesis, permissiveness and
// generation, over the line-oriented game format.  Boolean verbs answer via
// the exit code (0 = yes, 1 = no); hard errors exit with 2.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mwr/constrained.hpp"
#include "mwr/fixpoint.hpp"
#include "mwr/io.hpp"
#include "mwr/oracle.hpp"
#include "mwr/permissive.hpp"
#include "mwr/strategy.hpp"

namespace {

mwr::Format parse_format(const std::string& f) {
    if (f == "human") return mwr::Format::Human;
    if (f == "json") return mwr::Format::Json;
    if (f == "tsv") return mwr::Format::Tsv;
    if (f == "dot") return mwr::Format::Dot;
    throw CLI::ValidationError("--format", "unknown format " + f);
}

mwr::Order parse_order(const std::string& o) {
    if (o == "lex") return mwr::Order::Lexicographic;
    if (o == "comp") return mwr::Order::Componentwise;
    throw CLI::ValidationError("--order", "unknown order " + o);
}

mwr::CostProfile parse_profile(const std::string& s, int dim) {
    mwr::CostProfile p;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ','))
        p.c.push_back(mwr::ExtNat(std::stoull(part)));
    if (p.dim() != dim)
        throw std::runtime_error("profile " + s + " has dimension " +
                                 std::to_string(p.dim()) + ", game has " +
                                 std::to_string(dim));
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int start_vertex(const mwr::Game& game, const std::string& name) {
    if (!name.empty()) {
        int v = game.find_vertex(name);
        if (v < 0) throw std::runtime_error("unknown vertex " + name);
        return v;
    }
    if (game.initial()) return *game.initial();
    throw std::runtime_error("no initial vertex; pass --vertex");
}

void warn_all(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-weighted reachability game solver"};
    app.require_subcommand(1);

    std::string file, format = "human", order = "comp", vertex, profile;
    std::string strategy_file, out_file, mode = "cp", method = "fixpoint";
    std::uint64_t cost = 0, penalty = 0, seed = 0;
    int gen_vertices = 6, gen_dim = 2;
    std::uint64_t gen_maxw = 4, gen_maxp = 4;
    bool gen_pen = false;

    auto add_game_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "game file")->required();
        cmd->add_option("--format", format, "human|json|tsv|dot");
    };

    auto* c_solve = app.add_subcommand("solve", "fixpoint antichains for every vertex");
    add_game_arg(c_solve);
    c_solve->add_option("--order", order, "lex|comp");

    auto* c_front = app.add_subcommand("frontier", "ensured profiles of one vertex");
    add_game_arg(c_front);
    c_front->add_option("--order", order, "lex|comp");
    c_front->add_option("--vertex", vertex, "vertex name (default: init)");

    auto* c_check = app.add_subcommand("check", "is the profile ensured? (exit 0/1)");
    add_game_arg(c_check);
    c_check->add_option("--profile", profile, "c1,...,cd")->required();
    c_check->add_option("--order", order, "lex|comp");
    c_check->add_option("--method", method, "fixpoint|search (comp only)");
    c_check->add_option("--vertex", vertex, "vertex name (default: init)");

    auto* c_synth = app.add_subcommand("synth", "synthesize a strategy");
    add_game_arg(c_synth);
    c_synth->add_option("--profile", profile, "target profile (comp mode)");
    c_synth->add_option("--order", order, "comp: budget strategy, lex: positional");
    c_synth->add_option("--vertex", vertex, "start vertex (default: init)");
    c_synth->add_option("--out", out_file, "write strategy here (default: stdout)");

    auto* c_verify = app.add_subcommand("verify", "replay a strategy against all adversaries");
    add_game_arg(c_verify);
    c_verify->add_option("--strategy", strategy_file, "strategy file")->required();
    c_verify->add_option("--profile", profile, "budget profile")->required();
    c_verify->add_option("--order", order, "lex|comp");
    c_verify->add_option("--vertex", vertex, "start vertex (default: init)");

    auto* c_enum = app.add_subcommand("enumerate-positional",
                                      "all positional strategies and their guarantees");
    add_game_arg(c_enum);
    c_enum->add_option("--order", order, "lex|comp");
    c_enum->add_option("--vertex", vertex, "start vertex (default: init)");

    auto* c_extend = app.add_subcommand("extend", "emit the subset-expanded game");
    add_game_arg(c_extend);
    c_extend->add_option("--mode", mode, "cp|pc");

    auto* c_mce1 = app.add_subcommand("mce1", "multi-strategy with cost<=c and penalty<=p?");
    auto* c_mce2 = app.add_subcommand("mce2", "lexicographic (cost,penalty) bound?");
    auto* c_mce3 = app.add_subcommand("mce3", "lexicographic (penalty,cost) bound?");
    for (CLI::App* c : {c_mce1, c_mce2, c_mce3}) {
        add_game_arg(c);
        c->add_option("--cost", cost, "cost bound")->required();
        c->add_option("--penalty", penalty, "penalty bound")->required();
        c->add_option("--vertex", vertex, "start vertex (default: init)");
    }

    auto* c_mev1 = app.add_subcommand("mev1", "Pareto frontier of (cost,penalty)");
    auto* c_mev2 = app.add_subcommand("mev2", "least (cost,penalty) lexicographically");
    auto* c_mev3 = app.add_subcommand("mev3", "least (penalty,cost) lexicographically");
    for (CLI::App* c : {c_mev1, c_mev2, c_mev3}) {
        add_game_arg(c);
        c->add_option("--vertex", vertex, "start vertex (default: init)");
    }

    auto* c_eval = app.add_subcommand("eval-multistrategy",
                                      "worst cost and penalty of a multi-strategy");
    add_game_arg(c_eval);
    c_eval->add_option("--strategy", strategy_file, "multi-strategy file")->required();
    c_eval->add_option("--vertex", vertex, "start vertex (default: init)");

    auto* c_gen = app.add_subcommand("gen", "generate a game file");
    auto* c_gen_qss = c_gen->add_subcommand("qss", "from a `qss a1 ... an T` file");
    c_gen_qss->add_option("file", file, "qss instance file")->required();
    auto* c_gen_rand = c_gen->add_subcommand("random", "seeded random game");
    c_gen_rand->add_option("--seed", seed, "PRNG seed")->required();
    c_gen_rand->add_option("--vertices", gen_vertices, "max vertex count");
    c_gen_rand->add_option("--dim", gen_dim, "weight dimension");
    c_gen_rand->add_option("--max-weight", gen_maxw, "max weight component");
    c_gen_rand->add_flag("--penalties", gen_pen, "attach penalties (d=1)");
    c_gen_rand->add_option("--max-penalty", gen_maxp, "max penalty");

    auto* c_dot = app.add_subcommand("export-dot", "graphviz rendering");
    c_dot->add_option("file", file, "game file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        mwr::Format fmt = parse_format(format);

        if (c_gen_rand->parsed()) {
            mwr::RandomSpec spec;
            spec.vertices = gen_vertices;
            spec.dim = gen_dim;
            spec.max_weight = gen_maxw;
            spec.with_penalties = gen_pen;
            spec.max_penalty = gen_maxp;
            mwr::ParsedGame pg = mwr::random_game(seed, spec);
            std::cout << mwr::write_game(pg.game,
                                         pg.has_penalties ? &pg.penalties : nullptr);
            return 0;
        }
        if (c_gen_qss->parsed()) {
            auto [values, threshold] = mwr::parse_qss(slurp(file));
            mwr::QssInstance inst = mwr::qss_to_game(values, threshold);
            if (inst.trivially_false)
                std::cerr << "warning: threshold exceeds the total sum\n";
            std::cout << "# bound " << inst.bound.str() << "\n"
                      << mwr::write_game(inst.game);
            return 0;
        }

        mwr::ParsedGame pg = mwr::load_game(file);
        warn_all(pg.warnings);
        const mwr::Game& game = pg.game;

        if (c_dot->parsed()) {
            std::cout << mwr::export_dot(game,
                                         pg.has_penalties ? &pg.penalties : nullptr);
            return 0;
        }
        if (c_solve->parsed()) {
            mwr::SolveResult res = mwr::solve(game, parse_order(order));
            std::cout << mwr::emit_solve(game, res, fmt);
            return 0;
        }
        if (c_front->parsed()) {
            int v = start_vertex(game, vertex);
            mwr::SolveResult res = mwr::solve(game, parse_order(order));
            std::cout << mwr::emit_frontier(game, game.vertex(v).name,
                                            mwr::frontier(res, v), fmt);
            return 0;
        }
        if (c_check->parsed()) {
            int v = start_vertex(game, vertex);
            mwr::CostProfile x = parse_profile(profile, game.dim());
            bool yes;
            if (parse_order(order) == mwr::Order::Lexicographic) {
                yes = mwr::ce_lex(game, v, x);
            } else if (method == "search") {
                yes = mwr::ce_comp_search(game, v, x);
            } else {
                yes = mwr::ce_comp(game, v, x);
            }
            std::cout << (yes ? "yes" : "no") << "\n";
            return yes ? 0 : 1;
        }
        if (c_synth->parsed()) {
            int v = start_vertex(game, vertex);
            std::string text;
            if (parse_order(order) == mwr::Order::Lexicographic) {
                mwr::SolveResult res = mwr::solve(game, mwr::Order::Lexicographic);
                text = mwr::write_positional(game,
                                             mwr::synth_lex_positional(game, res));
            } else {
                if (profile.empty())
                    throw std::runtime_error("synth --order comp needs --profile");
                mwr::SolveResult res = mwr::solve(game, mwr::Order::Componentwise);
                mwr::ParetoStrategy s(game, res, v,
                                      parse_profile(profile, game.dim()));
                text = mwr::write_pareto(game, s, game.num_vertices());
            }
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file);
                out << text;
            }
            return 0;
        }
        if (c_verify->parsed()) {
            int v = start_vertex(game, vertex);
            mwr::Decide decide = mwr::read_strategy(game, slurp(strategy_file));
            mwr::VerificationReport rep = mwr::verify_strategy(
                game, decide, v, parse_profile(profile, game.dim()),
                parse_order(order), game.num_vertices());
            std::cout << mwr::emit_report(game, rep, fmt);
            return rep.pass ? 0 : 1;
        }
        if (c_enum->parsed()) {
            int v = start_vertex(game, vertex);
            for (const auto& [strat, ensured] :
                 mwr::enumerate_positional(game, v, parse_order(order))) {
                std::string moves;
                for (const auto& [from, to] : strat.moves)
                    moves += " " + game.vertex(from).name + "->" +
                             game.vertex(to).name;
                std::cout << "ensures " << ensured.str() << moves << "\n";
            }
            return 0;
        }
        if (c_extend->parsed()) {
            mwr::QuantGame qg = pg.quant();
            warn_all(qg.warnings);
            mwr::ExtendedGame eg = mwr::build_extended(
                qg, mode == "pc" ? mwr::ExtendMode::PenaltyCost
                                 : mwr::ExtendMode::CostPenalty);
            std::cout << mwr::write_game(eg.game);
            return 0;
        }
        if (c_mce1->parsed() || c_mce2->parsed() || c_mce3->parsed()) {
            mwr::QuantGame qg = pg.quant();
            warn_all(qg.warnings);
            int v = start_vertex(game, vertex);
            bool yes = c_mce1->parsed() ? mwr::mce1(qg, v, cost, penalty)
                       : c_mce2->parsed() ? mwr::mce2(qg, v, cost, penalty)
                                          : mwr::mce3(qg, v, penalty, cost);
            std::cout << (yes ? "yes" : "no") << "\n";
            return yes ? 0 : 1;
        }
        if (c_mev1->parsed() || c_mev2->parsed() || c_mev3->parsed()) {
            mwr::QuantGame qg = pg.quant();
            warn_all(qg.warnings);
            int v = start_vertex(game, vertex);
            if (c_mev1->parsed()) {
                std::cout << mwr::emit_frontier(game, game.vertex(v).name,
                                                mwr::mev1(qg, v), fmt);
            } else {
                mwr::CostProfile val = c_mev2->parsed() ? mwr::mev2(qg, v)
                                                        : mwr::mev3(qg, v);
                std::cout << val.str() << "\n";
            }
            return 0;
        }
        if (c_eval->parsed()) {
            mwr::QuantGame qg = pg.quant();
            warn_all(qg.warnings);
            int v = start_vertex(game, vertex);
            mwr::MultiStrategy ms =
                mwr::read_multistrategy(game, v, slurp(strategy_file));
            mwr::MultiEval ev = mwr::eval_multistrategy(qg, ms, v);
            std::cout << (ev.winning ? "winning " : "not-winning ")
                      << ev.pair.str() << "\n";
            return ev.winning ? 0 : 1;
        }
        throw std::runtime_error("unhandled subcommand");
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
