#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplicial/adjacency.hpp"
#include "simplicial/complex.hpp"
#include "simplicial/errors.hpp"

namespace simplicial {

// ---------------------------------------------------------------------------
// Degree centralities and their bounds
// ---------------------------------------------------------------------------

/// p-degree centrality of a vertex: its p-upper degree.
inline std::size_t degree_centrality_p(const SimplicialComplex& c, VertexId v, std::size_t p) {
    return deg_upper_p(c, Simplex{v}, p);
}

/// (p,p)-degree centrality of a vertex: the number of p-faces containing it.
/// strict additionally requires the face not to extend with v into a (p+1)-face.
inline std::size_t degree_centrality_pp(const SimplicialComplex& c, VertexId v, std::size_t p,
                                        bool strict = false) {
    return deg_upper_hp(c, Simplex{v}, p, p, strict);
}

/// Maximal simplicial degree centrality of a vertex: sum of strict (p,p)-degrees.
inline std::size_t max_simplicial_degree_centrality(const SimplicialComplex& c, VertexId v) {
    return deg_upper_max(c, Simplex{v});
}

/// Binomial upper bound on the p-degree centrality,
/// sum_{j=1..p+1} C(deg^(0,1)+1, j) - 1, with deg^(0,1) the neighbor count.
inline std::uint64_t degree_bound_binomial(const SimplicialComplex& c, VertexId v, std::size_t p) {
    const std::uint64_t neighbors = degree_centrality_pp(c, v, 1, false);
    std::uint64_t sum = 0;
    for (std::size_t j = 1; j <= p + 1; ++j) {
        // C(neighbors + 1, j), zero once j exceeds the top.
        if (j > neighbors + 1) break;
        std::uint64_t binom = 1;
        for (std::size_t i = 0; i < j; ++i) binom = binom * (neighbors + 1 - i) / (i + 1);
        sum += binom;
    }
    return sum == 0 ? 0 : sum - 1;
}

/// Upper bound c^(D^(p,p)) * (2^(p+1) - 2) on the p-degree centrality.
inline std::uint64_t degree_bound_pp(const SimplicialComplex& c, VertexId v, std::size_t p) {
    return static_cast<std::uint64_t>(degree_centrality_pp(c, v, p, false)) *
           ((std::uint64_t{1} << (p + 1)) - 2);
}

/// Upper bound c^(D^(1,1)) * dim on the maximal simplicial degree centrality.
inline std::uint64_t max_degree_bound(const SimplicialComplex& c, VertexId v) {
    if (c.dim() < 1) return 0;
    return static_cast<std::uint64_t>(degree_centrality_pp(c, v, 1, false)) *
           static_cast<std::uint64_t>(c.dim());
}

// ---------------------------------------------------------------------------
// p-walks, p-distance, closeness
// ---------------------------------------------------------------------------

/// Adjacency lists of the graph G_p joining vertex pairs that lie in a common
/// p-simplex, indexed by vertex position (ascending id order). Empty lists
/// for p > dim.
inline std::vector<std::vector<std::size_t>> p_walk_graph(const SimplicialComplex& c,
                                                          std::size_t p) {
    const std::size_t n = c.vertex_count();
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Simplex& f : c.faces_of_dim(p)) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const std::size_t a = c.vertex_index(vs[i]);
                const std::size_t b = c.vertex_index(vs[j]);
                if (!seen[a][b]) {
                    seen[a][b] = seen[b][a] = true;
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
            }
        }
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

/// Breadth-first distances from a source index in an adjacency-list graph;
/// nullopt marks unreachable vertices.
inline std::vector<std::optional<std::size_t>> bfs_distances(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
    std::vector<std::optional<std::size_t>> dist(adj.size());
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t w : adj[u]) {
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Length of the shortest p-walk between u and v; nullopt when none exists.
inline std::optional<std::size_t> p_distance(const SimplicialComplex& c, VertexId u, VertexId v,
                                             std::size_t p) {
    if (p < 1) throw std::out_of_range("p-distance requires p >= 1");
    const std::size_t iu = c.vertex_index(u);
    const std::size_t iv = c.vertex_index(v);
    if (iu == iv) return 0;
    return bfs_distances(p_walk_graph(c, p), iu)[iv];
}

enum class ClosenessVariant {
    reciprocal_of_sum,  // 1 / sum of distances; 0 when any vertex is unreachable
    harmonic            // sum of reciprocal distances, 1/infinity = 0
};

/// p-closeness centrality of a vertex under the chosen variant.
inline double closeness_centrality_p(const SimplicialComplex& c, VertexId v, std::size_t p,
                                     ClosenessVariant variant = ClosenessVariant::reciprocal_of_sum) {
    if (p < 1) throw std::out_of_range("closeness requires p >= 1");
    if (c.vertex_count() < 2) return 0.0;
    const auto dist = bfs_distances(p_walk_graph(c, p), c.vertex_index(v));
    double sum = 0.0;
    bool unreachable = false;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (i == c.vertex_index(v)) continue;
        if (!dist[i]) {
            unreachable = true;
            continue;
        }
        if (variant == ClosenessVariant::harmonic) {
            sum += 1.0 / static_cast<double>(*dist[i]);
        } else {
            sum += static_cast<double>(*dist[i]);
        }
    }
    if (variant == ClosenessVariant::harmonic) return sum;
    if (unreachable || sum == 0.0) return 0.0;
    return 1.0 / sum;
}

/// Maximal closeness centrality: sum of p-closeness over p = 1 .. dim.
inline double max_closeness_centrality(const SimplicialComplex& c, VertexId v,
                                       ClosenessVariant variant = ClosenessVariant::reciprocal_of_sum) {
    double total = 0.0;
    for (int p = 1; p <= c.dim(); ++p) {
        total += closeness_centrality_p(c, v, static_cast<std::size_t>(p), variant);
    }
    return total;
}

// ---------------------------------------------------------------------------
// p-adjacency matrix, connectivity, eigenvector centrality
// ---------------------------------------------------------------------------

/// Symmetric 0/1 matrix of p-upper adjacency between vertices, zero diagonal,
/// indexed by ascending vertex id.
struct PAdjacencyMatrix {
    std::size_t p = 0;
    std::vector<VertexId> order;
    std::vector<std::vector<int>> entries;
};

inline PAdjacencyMatrix p_adjacency_matrix(const SimplicialComplex& c, std::size_t p) {
    if (p < 1) throw std::out_of_range("p-adjacency matrix requires p >= 1");
    PAdjacencyMatrix m;
    m.p = p;
    m.order = c.vertices();
    const std::size_t n = m.order.size();
    m.entries.assign(n, std::vector<int>(n, 0));
    const auto adj = p_walk_graph(c, p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : adj[i]) m.entries[i][j] = 1;
    }
    return m;
}

/// True iff every vertex pair is joined by a walk whose consecutive vertices
/// share a common p-face.
inline bool is_p_upper_connected(const SimplicialComplex& c, std::size_t p) {
    if (p < 1) throw std::out_of_range("p-upper connectivity requires p >= 1");
    const std::size_t n = c.vertex_count();
    if (n <= 1) return true;
    const auto dist = bfs_distances(p_walk_graph(c, p), 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

/// A symmetric 0/1 matrix is irreducible iff its graph is connected.
inline bool is_irreducible(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    }
    if (n == 0) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && m[i][j] != 0) adj[i].push_back(j);
        }
    }
    const auto dist = bfs_distances(adj, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

/// Eigenvector centrality values for one p, with per-component metadata.
struct EigenvectorReport {
    std::size_t p = 0;
    std::vector<VertexId> order;          // ascending vertex ids
    std::vector<double> values;           // 0 for vertices in no p-simplex
    std::vector<int> component_of;        // -1 for p-isolated vertices
    std::vector<double> eigenvalues;      // dominant eigenvalue per component
    std::size_t iterations = 0;           // worst component
    bool all_zero = false;                // no p-adjacency at all
};

namespace detail {

// Dominant eigenpair of the principal submatrix indexed by comp, by power
// iteration on A + I. The shift keeps the dominant eigenvalue simple on
// bipartite components; eigenvectors are unchanged.
inline std::pair<double, std::size_t> dominant_eigenvector(
    const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& comp,
    std::vector<double>& x, double tolerance, std::size_t max_iterations) {
    const std::size_t n = comp.size();
    std::vector<std::size_t> local(adj.size(), 0);
    for (std::size_t i = 0; i < n; ++i) local[comp[i]] = i;

    x.assign(n, 1.0);
    std::vector<double> ax(n, 0.0);
    double lambda = 0.0;
    for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t nb : adj[comp[i]]) acc += x[local[nb]];
            ax[i] = acc;
        }
        // Rayleigh quotient of the unshifted matrix.
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += x[i] * ax[i];
            den += x[i] * x[i];
        }
        lambda = num / den;
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
        }
        if (lambda > 0.0 && residual / lambda <= tolerance) return {lambda, iter};

        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ax[i] += x[i];  // shifted step (A + I) x
            norm = std::max(norm, std::abs(ax[i]));
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / norm;
    }
    throw ConvergenceError("power iteration did not converge within " +
                           std::to_string(max_iterations) + " iterations");
}

}  // namespace detail

/// Per nontrivial connected component of G_p, the dominant eigenvector with
/// nonnegative entries, each component rescaled so its smallest positive
/// entry equals 1. Vertices in no p-simplex receive 0.
inline EigenvectorReport eigenvector_centrality_p(const SimplicialComplex& c, std::size_t p,
                                                  double tolerance = 1e-10,
                                                  std::size_t max_iterations = 10000) {
    if (p < 1) throw std::out_of_range("eigenvector centrality requires p >= 1");
    EigenvectorReport report;
    report.p = p;
    report.order = c.vertices();
    const std::size_t n = report.order.size();
    report.values.assign(n, 0.0);
    report.component_of.assign(n, -1);

    const auto adj = p_walk_graph(c, p);
    std::vector<bool> visited(n, false);
    int comp_id = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start] || adj[start].empty()) continue;
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (std::size_t w : adj[u]) {
                if (!visited[w]) {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());

        std::vector<double> x;
        const auto [lambda, iters] =
            detail::dominant_eigenvector(adj, comp, x, tolerance, max_iterations);
        double min_positive = std::numeric_limits<double>::infinity();
        for (double v : x) {
            if (v > 0.0) min_positive = std::min(min_positive, v);
        }
        for (std::size_t i = 0; i < comp.size(); ++i) {
            report.values[comp[i]] = x[i] / min_positive;
            report.component_of[comp[i]] = comp_id;
        }
        report.eigenvalues.push_back(lambda);
        report.iterations = std::max(report.iterations, iters);
        ++comp_id;
    }
    report.all_zero = report.eigenvalues.empty();
    return report;
}

/// Maximal simplicial eigenvector centrality of one vertex: sum of its per-p
/// values over p = 1 .. dim under the module's fixed normalization.
inline double max_eigenvector_centrality(const SimplicialComplex& c, VertexId v,
                                         double tolerance = 1e-10,
                                         std::size_t max_iterations = 10000) {
    double total = 0.0;
    for (int p = 1; p <= c.dim(); ++p) {
        const auto report = eigenvector_centrality_p(c, static_cast<std::size_t>(p), tolerance,
                                                     max_iterations);
        total += report.values[c.vertex_index(v)];
    }
    return total;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Per-vertex table of one named centrality measure.
struct CentralityReport {
    std::string measure;            // e.g. "degree_pp", "closeness", "eigenvector"
    std::optional<std::size_t> p;   // nullopt for maximal (over-p) measures
    std::vector<VertexId> order;
    std::vector<double> values;

    struct Meta {
        int complex_dim = -1;
        std::string variant;              // closeness variant or "strict"
        std::vector<double> eigenvalues;  // per component, eigenvector measures only
        std::size_t iterations = 0;
        bool all_zero = false;
        bool cross_component_scale = false;  // component scales not comparable
    } meta;
};

}  // namespace simplicial
