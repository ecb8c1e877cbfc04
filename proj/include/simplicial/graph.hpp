#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplicial/simplex.hpp"

namespace simplicial {

/// Simple undirected graph over externally supplied vertex ids.
class Graph {
public:
    void add_vertex(VertexId v) { vertices_.insert(v); }

    void add_edge(VertexId u, VertexId v) {
        if (u == v) {
            throw std::invalid_argument("loop edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not allowed");
        }
        vertices_.insert(u);
        vertices_.insert(v);
        edges_.insert(ordered(u, v));
    }

    bool has_edge(VertexId u, VertexId v) const {
        return u != v && edges_.contains(ordered(u, v));
    }

    bool has_vertex(VertexId v) const { return vertices_.contains(v); }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::vector<VertexId> vertices() const { return {vertices_.begin(), vertices_.end()}; }
    const std::set<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (const auto& [a, b] : edges_) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        return out;
    }

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

private:
    static std::pair<VertexId, VertexId> ordered(VertexId u, VertexId v) {
        return u < v ? std::pair{u, v} : std::pair{v, u};
    }

    std::set<VertexId> vertices_;
    std::set<std::pair<VertexId, VertexId>> edges_;
};

}  // namespace simplicial
