#include "mwr/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mwr {

QuantGame ParsedGame::quant() const {
    std::vector<std::uint64_t> pens = penalties;
    pens.resize(static_cast<std::size_t>(game.num_edges()), 0);
    return QuantGame(game, std::move(pens));
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Make the penalty separator its own token.
    std::string spaced;
    for (char c : line) {
        if (c == '|')
            spaced += " | ";
        else
            spaced += c;
    }
    std::istringstream in(spaced);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::uint64_t parse_nat(const std::string& s, int line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a natural number, got '" + s + "'");
    return std::stoull(s);
}

}  // namespace

ParsedGame parse_game(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;
    {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            auto toks = tokenize(line);
            if (!toks.empty()) {
                rows.push_back(std::move(toks));
                row_lines.push_back(no);
            }
        }
    }

    // Dimension: explicit directive wins, otherwise the first edge decides.
    int dim = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][0] == "dim") {
            if (rows[i].size() != 2) fail(row_lines[i], "usage: dim <d>");
            dim = static_cast<int>(parse_nat(rows[i][1], row_lines[i]));
            if (dim < 1) fail(row_lines[i], "dimension must be at least 1");
            break;
        }
    }
    if (dim < 0) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][0] != "edge") continue;
            std::size_t w = 3;
            while (w < rows[i].size() && rows[i][w] != "|") ++w;
            if (w <= 3) fail(row_lines[i], "edge needs at least one weight");
            dim = static_cast<int>(w - 3);
            break;
        }
        if (dim < 0) fail(1, "cannot determine dimension (no dim, no edge)");
    }

    Game game(dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r[0] != "vertex") continue;
        if (r.size() < 3 || r.size() > 4)
            fail(row_lines[i], "usage: vertex <name> owner=<1|2> [target]");
        Player owner;
        if (r[2] == "owner=1")
            owner = Player::P1;
        else if (r[2] == "owner=2")
            owner = Player::P2;
        else
            fail(row_lines[i], "expected owner=1 or owner=2");
        bool target = false;
        if (r.size() == 4) {
            if (r[3] != "target") fail(row_lines[i], "unexpected '" + r[3] + "'");
            target = true;
        }
        if (game.find_vertex(r[1]) >= 0)
            fail(row_lines[i], "duplicate vertex " + r[1]);
        game.add_vertex(r[1], owner, target);
    }

    ParsedGame pg{std::move(game), false, {}, {}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r[0] == "dim" || r[0] == "vertex") continue;
        if (r[0] == "init") {
            if (r.size() != 2) fail(row_lines[i], "usage: init <name>");
            int v = pg.game.find_vertex(r[1]);
            if (v < 0) fail(row_lines[i], "unknown vertex " + r[1]);
            pg.game.set_initial(v);
            continue;
        }
        if (r[0] != "edge")
            fail(row_lines[i], "unknown directive '" + r[0] + "'");
        if (r.size() < static_cast<std::size_t>(3 + dim))
            fail(row_lines[i], "edge needs " + std::to_string(dim) + " weights");
        int src = pg.game.find_vertex(r[1]);
        if (src < 0) fail(row_lines[i], "unknown vertex " + r[1]);
        int dst = pg.game.find_vertex(r[2]);
        if (dst < 0) fail(row_lines[i], "unknown vertex " + r[2]);
        CostProfile w;
        for (int k = 0; k < dim; ++k)
            w.c.push_back(ExtNat(
                parse_nat(r[static_cast<std::size_t>(3 + k)], row_lines[i])));
        std::uint64_t pen = 0;
        std::size_t rest = static_cast<std::size_t>(3 + dim);
        if (rest < r.size()) {
            if (r[rest] != "|" || r.size() != rest + 2)
                fail(row_lines[i], "trailing tokens after edge weights");
            if (dim != 1)
                fail(row_lines[i], "penalties require a one-weighted game");
            pen = parse_nat(r[rest + 1], row_lines[i]);
            pg.has_penalties = true;
        }
        pg.game.add_edge(src, dst, std::move(w));
        pg.penalties.push_back(pen);
    }
    for (const std::string& d : pg.game.validate()) pg.warnings.push_back(d);
    return pg;
}

ParsedGame load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

std::string write_game(const Game& game,
                       const std::vector<std::uint64_t>* penalties) {
    std::ostringstream out;
    out << "dim " << game.dim() << "\n";
    for (const Vertex& v : game.vertices()) {
        out << "vertex " << v.name << " owner="
            << (v.owner == Player::P1 ? 1 : 2);
        if (v.is_target) out << " target";
        out << "\n";
    }
    for (int e = 0; e < game.num_edges(); ++e) {
        const Edge& edge = game.edge(e);
        out << "edge " << game.vertex(edge.src).name << " "
            << game.vertex(edge.dst).name;
        for (ExtNat w : edge.weight.c) out << " " << w.str();
        if (penalties) out << " | " << (*penalties)[static_cast<std::size_t>(e)];
        out << "\n";
    }
    if (game.initial())
        out << "init " << game.vertex(*game.initial()).name << "\n";
    return out.str();
}

namespace {

nlohmann::ordered_json profile_json(const CostProfile& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (ExtNat x : p.c) {
        if (x.is_inf())
            arr.push_back("inf");
        else
            arr.push_back(x.finite());
    }
    return arr;
}

std::string profiles_str(const std::vector<CostProfile>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ",";
        s += ps[i].str();
    }
    return s + "}";
}

// Vertex ids in name order, for stable reports.
std::vector<int> by_name(const Game& game) {
    std::vector<int> ids(static_cast<std::size_t>(game.num_vertices()));
    for (int v = 0; v < game.num_vertices(); ++v)
        ids[static_cast<std::size_t>(v)] = v;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return game.vertex(a).name < game.vertex(b).name;
    });
    return ids;
}

}  // namespace

std::string emit_solve(const Game& game, const SolveResult& result,
                       Format format) {
    std::vector<int> ids = by_name(game);
    switch (format) {
        case Format::Human: {
            std::ostringstream out;
            out << "order: "
                << (result.order == Order::Lexicographic ? "lexicographic"
                                                         : "componentwise")
                << "\n";
            out << "k*: " << result.k_star << "\n";
            out << "iterations: " << result.iterations << "\n";
            for (int v : ids)
                out << game.vertex(v).name << ": "
                    << profiles_str(frontier(result, v)) << "\n";
            return out.str();
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["order"] = result.order == Order::Lexicographic ? "lex" : "comp";
            j["k_star"] = result.k_star;
            j["iterations"] = result.iterations;
            nlohmann::ordered_json fr;
            for (int v : ids) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const CostProfile& p : frontier(result, v))
                    arr.push_back(profile_json(p));
                fr[game.vertex(v).name] = arr;
            }
            j["frontiers"] = fr;
            return j.dump() + "\n";
        }
        case Format::Tsv: {
            std::ostringstream out;
            for (int v : ids) {
                out << game.vertex(v).name;
                for (const CostProfile& p : frontier(result, v))
                    out << "\t" << p.str();
                out << "\n";
            }
            return out.str();
        }
        case Format::Dot:
            throw std::invalid_argument("dot output is for games, not results");
    }
    return {};
}

std::string emit_frontier(const Game& game, const std::string& vertex_name,
                          const std::vector<CostProfile>& front,
                          Format format) {
    switch (format) {
        case Format::Human:
            return vertex_name + ": " + profiles_str(front) + "\n";
        case Format::Json: {
            nlohmann::ordered_json j;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const CostProfile& p : front) arr.push_back(profile_json(p));
            j[vertex_name] = arr;
            return j.dump() + "\n";
        }
        case Format::Tsv: {
            std::string out = vertex_name;
            for (const CostProfile& p : front) out += "\t" + p.str();
            return out + "\n";
        }
        case Format::Dot:
            throw std::invalid_argument("dot output is for games");
    }
    (void)game;
    return {};
}

std::string emit_report(const Game& game, const VerificationReport& report,
                        Format format) {
    if (format == Format::Json) {
        nlohmann::ordered_json j;
        j["pass"] = report.pass;
        j["worst"] = profile_json(report.worst);
        j["max_steps"] = report.max_steps;
        nlohmann::ordered_json play = nlohmann::ordered_json::array();
        for (int v : report.counterexample) play.push_back(game.vertex(v).name);
        j["counterexample"] = play;
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << (report.pass ? "pass" : "fail") << "\n";
    out << "worst: " << report.worst.str() << "\n";
    out << "max-steps: " << report.max_steps << "\n";
    if (!report.counterexample.empty()) {
        out << "counterexample:";
        for (int v : report.counterexample) out << " " << game.vertex(v).name;
        out << "\n";
    }
    return out.str();
}

std::string export_dot(const Game& game,
                       const std::vector<std::uint64_t>* penalties) {
    std::ostringstream out;
    out << "digraph arena {\n";
    for (const Vertex& v : game.vertices()) {
        out << "  n" << v.id << " [label=\"" << v.name << "\" shape="
            << (v.owner == Player::P1 ? "ellipse" : "box");
        if (v.is_target) out << " peripheries=2";
        out << "];\n";
    }
    for (int e = 0; e < game.num_edges(); ++e) {
        const Edge& edge = game.edge(e);
        out << "  n" << edge.src << " -> n" << edge.dst << " [label=\"";
        for (std::size_t i = 0; i < edge.weight.c.size(); ++i) {
            if (i) out << ",";
            out << edge.weight.c[i].str();
        }
        if (penalties) out << "|" << (*penalties)[static_cast<std::size_t>(e)];
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

std::string profile_csv(const CostProfile& p) {
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += ",";
        s += p.c[i].str();
    }
    return s;
}

CostProfile parse_profile_csv(const std::string& s, int dim) {
    CostProfile p;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part == "inf")
            p.c.push_back(ExtNat::inf());
        else
            p.c.push_back(ExtNat(parse_nat(part, 0)));
    }
    if (dim > 0 && p.dim() != dim)
        throw std::runtime_error("profile '" + s + "' has wrong dimension");
    return p;
}

}  // namespace

std::string write_positional(const Game& game, const PositionalStrategy& s) {
    std::ostringstream out;
    for (const auto& [v, succ] : s.moves)
        out << "move " << game.vertex(v).name << " " << game.vertex(succ).name
            << "\n";
    return out.str();
}

std::string write_pareto(const Game& game, const ParetoStrategy& s,
                         int depth) {
    // Tabulate the decisions at every (vertex, accumulated cost) reachable
    // against an unconstrained adversary.
    std::map<std::pair<int, CostProfile>,
             int,
             decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first) return a.first < b.first;
                 return LexLess{}(a.second, b.second);
             })>
        decisions;
    std::set<std::pair<int, std::string>> seen;
    std::function<void(int, const CostProfile&, int)> walk =
        [&](int v, const CostProfile& acc, int d) {
            if (game.is_target(v) || d == 0) return;
            if (!seen.insert({v, acc.str()}).second) return;
            if (game.owner(v) == Player::P1) {
                int succ = s.next(v, acc);
                decisions[{v, acc}] = succ;
                for (int e : game.out(v)) {
                    const Edge& edge = game.edge(e);
                    if (edge.dst == succ) {
                        walk(edge.dst, acc + edge.weight, d - 1);
                        break;
                    }
                }
            } else {
                for (int e : game.out(v)) {
                    const Edge& edge = game.edge(e);
                    walk(edge.dst, acc + edge.weight, d - 1);
                }
            }
        };
    walk(s.start(), CostProfile::zero(game.dim()), depth);
    std::ostringstream out;
    for (const auto& [key, succ] : decisions)
        out << "decide " << game.vertex(key.first).name << " "
            << profile_csv(key.second) << " " << game.vertex(succ).name << "\n";
    return out.str();
}

Decide read_strategy(const Game& game, const std::string& text) {
    auto moves = std::make_shared<std::map<int, int>>();
    auto table = std::make_shared<std::map<std::pair<int, std::string>, int>>();
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "move" && toks.size() == 3) {
            int v = game.find_vertex(toks[1]);
            int s = game.find_vertex(toks[2]);
            if (v < 0 || s < 0) fail(no, "unknown vertex in strategy");
            (*moves)[v] = s;
        } else if (toks[0] == "decide" && toks.size() == 4) {
            int v = game.find_vertex(toks[1]);
            int s = game.find_vertex(toks[3]);
            if (v < 0 || s < 0) fail(no, "unknown vertex in strategy");
            CostProfile acc = parse_profile_csv(toks[2], game.dim());
            (*table)[{v, acc.str()}] = s;
        } else {
            fail(no, "unknown strategy directive");
        }
    }
    return [moves, table](int v, const CostProfile& acc) {
        auto it = table->find({v, acc.str()});
        if (it != table->end()) return it->second;
        auto im = moves->find(v);
        return im == moves->end() ? -1 : im->second;
    };
}

std::string write_multistrategy(const Game& game, const MultiStrategy& ms) {
    std::ostringstream out;
    out << (ms.is_positional() ? "multistrategy positional\n"
                               : "multistrategy table\n");
    for (const auto& [v, cost, pen, subset] : ms.entries()) {
        out << "allow " << game.vertex(v).name << " " << cost << " " << pen
            << " ";
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i) out << ",";
            out << game.vertex(subset[i]).name;
        }
        out << "\n";
    }
    return out.str();
}

MultiStrategy read_multistrategy(const Game& game, int start,
                                 const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    bool positional = true;
    bool header_seen = false;
    std::map<int, std::vector<int>> pos;
    std::map<std::pair<int, std::pair<std::uint64_t, std::uint64_t>>,
             std::vector<int>>
        table;
    while (std::getline(in, line)) {
        ++no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "multistrategy") {
            if (toks.size() != 2 ||
                (toks[1] != "positional" && toks[1] != "table"))
                fail(no, "usage: multistrategy positional|table");
            positional = toks[1] == "positional";
            header_seen = true;
            continue;
        }
        if (toks[0] != "allow" || toks.size() != 5)
            fail(no, "usage: allow <vertex> <cost> <penalty> <v1,v2,...>");
        int v = game.find_vertex(toks[1]);
        if (v < 0) fail(no, "unknown vertex " + toks[1]);
        std::uint64_t cost = parse_nat(toks[2], no);
        std::uint64_t pen = parse_nat(toks[3], no);
        std::vector<int> subset;
        std::istringstream parts(toks[4]);
        std::string part;
        while (std::getline(parts, part, ',')) {
            int u = game.find_vertex(part);
            if (u < 0) fail(no, "unknown vertex " + part);
            subset.push_back(u);
        }
        if (subset.empty()) fail(no, "empty successor subset");
        if (positional)
            pos[v] = subset;
        else
            table[{v, {cost, pen}}] = subset;
    }
    if (!header_seen) fail(1, "missing multistrategy header line");
    return positional ? MultiStrategy::positional(start, std::move(pos))
                      : MultiStrategy::table(start, std::move(table));
}

ParsedGame random_game(std::uint64_t seed, const RandomSpec& spec) {
    // mt19937_64 with modulo draws: fully deterministic across platforms.
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };

    int n = 2 + static_cast<int>(draw(
                    static_cast<std::uint64_t>(std::max(1, spec.vertices - 1))));
    Game game(spec.dim);
    for (int v = 0; v < n; ++v) {
        Player owner = draw(2) == 0 ? Player::P1 : Player::P2;
        bool target = draw(4) == 0;
        game.add_vertex("v" + std::to_string(v), owner, target);
    }
    std::vector<std::uint64_t> pens;
    std::uint32_t chance =
        static_cast<std::uint32_t>(spec.extra_edge_chance * 1000.0);
    for (int v = 0; v < n; ++v) {
        std::set<int> dsts;
        dsts.insert(static_cast<int>(draw(static_cast<std::uint64_t>(n))));
        for (int u = 0; u < n; ++u)
            if (draw(1000) < chance) dsts.insert(u);
        for (int u : dsts) {
            CostProfile w;
            for (int k = 0; k < spec.dim; ++k)
                w.c.push_back(ExtNat(draw(spec.max_weight + 1)));
            game.add_edge(v, u, std::move(w));
            bool p2 = game.owner(v) == Player::P2;
            pens.push_back(spec.with_penalties && !p2
                               ? draw(spec.max_penalty + 1)
                               : 0);
        }
    }
    game.set_initial(0);
    ParsedGame pg{std::move(game), spec.with_penalties, std::move(pens), {}};
    if (!spec.with_penalties) pg.penalties.assign(pg.penalties.size(), 0);
    return pg;
}

std::pair<std::vector<std::uint64_t>, std::uint64_t> parse_qss(
    const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty() || toks[0] != "qss")
        throw std::runtime_error("line 1: expected 'qss a1 ... an T'");
    if (toks.size() < 2)
        throw std::runtime_error("line 1: missing threshold");
    std::vector<std::uint64_t> values;
    for (std::size_t i = 1; i + 1 < toks.size(); ++i)
        values.push_back(parse_nat(toks[i], 1));
    std::uint64_t threshold = parse_nat(toks.back(), 1);
    return {std::move(values), threshold};
}

}  // namespace mwr
