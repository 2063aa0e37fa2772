#include "mwr/game.hpp"

namespace mwr {

int Game::add_vertex(std::string name, Player owner, bool is_target) {
    int id = static_cast<int>(vertices_.size());
    vertices_.push_back(Vertex{id, std::move(name), owner, is_target});
    out_.emplace_back();
    return id;
}

int Game::add_edge(int src, int dst, CostProfile weight) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{src, dst, std::move(weight)});
    if (src >= 0 && src < num_vertices())
        out_[static_cast<std::size_t>(src)].push_back(id);
    return id;
}

int Game::find_vertex(const std::string& name) const {
    for (const Vertex& v : vertices_)
        if (v.name == name) return v.id;
    return -1;
}

std::uint64_t Game::max_weight() const {
    std::uint64_t w = 0;
    for (const Edge& e : edges_)
        for (ExtNat x : e.weight.c)
            if (!x.is_inf() && x.finite() > w) w = x.finite();
    return w;
}

std::vector<std::string> Game::validate() const {
    std::vector<std::string> diags;
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= num_vertices() || e.dst < 0 ||
            e.dst >= num_vertices()) {
            diags.push_back("edge with out-of-range endpoint (" +
                            std::to_string(e.src) + " -> " +
                            std::to_string(e.dst) + ")");
            continue;
        }
        if (e.weight.dim() != dim_)
            diags.push_back("dimension mismatch on edge " +
                            vertex(e.src).name + " -> " + vertex(e.dst).name);
        if (!e.weight.is_finite())
            diags.push_back("infinite weight on edge " + vertex(e.src).name +
                            " -> " + vertex(e.dst).name);
    }
    for (const Vertex& v : vertices_)
        if (out_[static_cast<std::size_t>(v.id)].empty())
            diags.push_back("deadlocked vertex " + v.name);
    if (initial_ && (*initial_ < 0 || *initial_ >= num_vertices()))
        diags.push_back("initial vertex out of range");
    return diags;
}

}  // namespace mwr
