#pragma once
/*
 * Weighted arena: vertices split between two players, edges carrying
 * d-dimensional natural weights, a target set and an optional initial vertex.
 * Edge insertion order is preserved everywhere: successor lists iterate in
 * input order, which is also the tie-breaking order of the solver.
 */

#include <optional>
#include <string>
#include <vector>

#include "mwr/profile.hpp"

namespace mwr {

enum class Player { P1, P2 };

struct Vertex {
    int id = -1;
    std::string name;
    Player owner = Player::P1;
    bool is_target = false;
};

struct Edge {
    int src = -1;
    int dst = -1;
    CostProfile weight;  // all components finite
};

class Game {
public:
    explicit Game(int dimension) : dim_(dimension) {}

    int add_vertex(std::string name, Player owner, bool is_target = false);
    int add_edge(int src, int dst, CostProfile weight);

    void set_initial(int v) { initial_ = v; }

    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Outgoing edge indices of v, in input order.
    const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }

    std::optional<int> initial() const { return initial_; }

    // Vertex id by name, or -1.
    int find_vertex(const std::string& name) const;

    bool is_target(int v) const { return vertex(v).is_target; }
    Player owner(int v) const { return vertex(v).owner; }

    // Largest finite weight component over all edges (W in complexity terms).
    std::uint64_t max_weight() const;

    // Human-readable structural problems; empty means valid.
    std::vector<std::string> validate() const;

private:
    int dim_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::optional<int> initial_;
};

}  // namespace mwr
