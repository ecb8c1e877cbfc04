#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplicial/complex.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/metric.hpp"

namespace simplicial {

namespace detail {

// Incremental clique expansion: every clique is emitted exactly once, in
// ascending vertex order, by extending through common lower neighborhoods.
inline void expand_cliques(const std::map<VertexId, std::vector<VertexId>>& lower,
                           std::vector<VertexId>& current,
                           const std::vector<VertexId>& candidates,
                           std::optional<std::size_t> max_dim,
                           std::vector<Simplex>& out) {
    out.emplace_back(current);
    if (max_dim && current.size() >= *max_dim + 1) return;
    for (VertexId v : candidates) {
        const auto& lv = lower.at(v);
        std::vector<VertexId> next;
        for (VertexId c : candidates) {
            if (c != v && std::binary_search(lv.begin(), lv.end(), c)) next.push_back(c);
        }
        current.push_back(v);
        expand_cliques(lower, current, next, max_dim, out);
        current.pop_back();
    }
}

}  // namespace detail

/// Complex whose k-simplices are exactly the (k+1)-cliques of g, optionally
/// truncated to dimension <= max_dim.
inline SimplicialComplex build_clique_complex(const Graph& g,
                                              std::optional<std::size_t> max_dim = std::nullopt) {
    std::map<VertexId, std::vector<VertexId>> lower;
    for (VertexId v : g.vertices()) lower[v] = {};
    for (const auto& [u, v] : g.edges()) lower[v].push_back(u);  // u < v by construction
    for (auto& [v, ns] : lower) std::sort(ns.begin(), ns.end());

    std::vector<Simplex> faces;
    std::vector<VertexId> current;
    for (const auto& [v, below] : lower) {
        current.assign(1, v);
        detail::expand_cliques(lower, current, below, max_dim, faces);
        current.clear();
    }
    return SimplicialComplex::from_faces(faces);
}

/// Graph joining point pairs at distance <= r under the chosen metric.
inline Graph neighborhood_graph(const PointCloud& pc, Metric metric, double r) {
    if (r <= 0.0) throw std::invalid_argument("radius must be positive");
    Graph g;
    const auto ids = pc.ids();
    for (VertexId id : ids) g.add_vertex(id);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (pc.distance(ids[i], ids[j], metric) <= r) g.add_edge(ids[i], ids[j]);
        }
    }
    return g;
}

/// Vietoris-Rips complex: k-simplices are the vertex sets with pairwise
/// distance <= r. Equals the clique complex of the r-neighborhood graph.
inline SimplicialComplex build_vietoris_rips(const PointCloud& pc, Metric metric, double r,
                                             std::optional<std::size_t> max_dim = std::nullopt) {
    return build_clique_complex(neighborhood_graph(pc, metric, r), max_dim);
}

}  // namespace simplicial
