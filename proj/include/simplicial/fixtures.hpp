#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "simplicial/complex.hpp"
#include "simplicial/construct.hpp"
#include "simplicial/graph.hpp"
#include "simplicial/metric.hpp"
#include "simplicial/mining.hpp"

// Self-contained reference data for the bundled worked examples and the
// congress feature tables. No network access; nothing here is recomputed.

namespace simplicial::fixtures {

// ---------------------------------------------------------------------------
// Five-vertex worked example
// ---------------------------------------------------------------------------

/// Edges 12,13,23,45,25,24 on vertices 1..5; the clique complex has
/// f-vector (5, 6, 2) with facets {1,2,3} and {2,4,5}.
inline Graph example5_graph() {
    Graph g;
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    g.add_edge(2, 5);
    g.add_edge(2, 4);
    return g;
}

inline SimplicialComplex example5_complex() { return build_clique_complex(example5_graph()); }

/// Planar placement used for the worked pairwise-distance values
/// (d2(x1,x2) = 3/2, d3(x1,x2) = 2).
inline PointCloud example5_figure_points() {
    PointCloud pc;
    pc.add_point(1, {1.0, 0.0});
    pc.add_point(2, {2.5, 0.5});
    pc.add_point(3, {1.5, 1.5});
    pc.add_point(4, {3.5, 1.5});
    pc.add_point(5, {4.5, 1.5});
    return pc;
}

/// A Euclidean realization whose Vietoris-Rips complex at r = 3 is exactly
/// the five-vertex complex; the pair {2,4} sits at distance exactly 3 to
/// exercise the inclusive threshold.
inline PointCloud example5_vr_points() {
    PointCloud pc;
    pc.add_point(1, {0.0, 0.0});
    pc.add_point(2, {2.0, 0.0});
    pc.add_point(3, {1.0, 1.5});
    pc.add_point(4, {5.0, 0.0});
    pc.add_point(5, {4.0, -2.0});
    return pc;
}

// ---------------------------------------------------------------------------
// Two-complex degree/closeness example
// ---------------------------------------------------------------------------

inline constexpr VertexId kTetraVertex = 0;      // sigma_1
inline constexpr VertexId kWheelHub = 0;         // sigma_2
inline constexpr VertexId kClosenessVertex = 3;  // sigma_3
inline constexpr VertexId kPendantVertex = 11;

/// A lone tetrahedron {0,1,2,3}; vertex 0 has strict (3,3)-degree 1,
/// maximal simplicial degree 1, and degree bound 3 * 3 = 9.
inline SimplicialComplex tetrahedron_complex() {
    return SimplicialComplex::from_facets({Simplex{0, 1, 2, 3}});
}

/// A 6-wheel: hub 0, ring 1..6. The hub has strict (2,2)-degree 6, maximal
/// simplicial degree 6, and degree bound 6 * 2 = 12.
inline SimplicialComplex wheel6_complex() {
    Graph g;
    for (VertexId i = 1; i <= 6; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i == 6 ? 1 : i + 1);
    }
    return build_clique_complex(g);
}

/// Nine-vertex complex around hub 2 with six triangles; vertex 3 sees two
/// vertices at distance 1 and six at distance 2, in both G_1 and G_2.
inline Graph closeness9_graph() {
    Graph g;
    g.add_edge(2, 10);
    g.add_edge(2, 9);
    g.add_edge(9, 10);
    g.add_edge(3, 4);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(8, 6);
    g.add_edge(2, 6);
    g.add_edge(2, 8);
    g.add_edge(7, 4);
    g.add_edge(2, 7);
    g.add_edge(2, 5);
    g.add_edge(5, 6);
    g.add_edge(8, 9);
    return g;
}

inline SimplicialComplex closeness9_complex() { return build_clique_complex(closeness9_graph()); }

/// The same complex with an extra vertex attached to vertex 3 by a bare edge
/// that lies in no triangle.
inline SimplicialComplex closeness9_pendant_complex() {
    Graph g = closeness9_graph();
    g.add_edge(kClosenessVertex, kPendantVertex);
    return build_clique_complex(g);
}

// ---------------------------------------------------------------------------
// Seven-vertex eigenvector example
// ---------------------------------------------------------------------------

/// Ten-edge graph on vertices 1..7 whose clique complex carries the
/// seven-vertex eigenvector example. Its 1- and 2-adjacency matrices differ
/// exactly in the entries (1,6)/(6,1).
inline Graph eigen7_graph() {
    Graph g;
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(2, 5);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    g.add_edge(4, 7);
    g.add_edge(6, 7);
    g.add_edge(1, 6);
    return g;
}

inline SimplicialComplex eigen7_complex() { return build_clique_complex(eigen7_graph()); }

using Matrix7 = std::array<std::array<int, 7>, 7>;

/// Reference 1-adjacency matrix of the seven-vertex example (pairs sharing
/// an edge).
inline Matrix7 eigen7_matrix_p1() {
    return {{{0, 1, 1, 0, 0, 1, 0},
             {1, 0, 1, 1, 1, 0, 0},
             {1, 1, 0, 0, 0, 0, 0},
             {0, 1, 0, 0, 1, 1, 1},
             {0, 1, 0, 1, 0, 0, 0},
             {1, 0, 0, 1, 0, 0, 1},
             {0, 0, 0, 1, 0, 1, 0}}};
}

/// Reference 2-adjacency matrix (pairs sharing a triangle).
inline Matrix7 eigen7_matrix_p2() {
    return {{{0, 1, 1, 0, 0, 0, 0},
             {1, 0, 1, 1, 1, 0, 0},
             {1, 1, 0, 0, 0, 0, 0},
             {0, 1, 0, 0, 1, 1, 1},
             {0, 1, 0, 1, 0, 0, 0},
             {0, 0, 0, 1, 0, 0, 1},
             {0, 0, 0, 1, 0, 1, 0}}};
}

/// Expected eigenvector entry ratios (smallest positive entry = 1).
inline std::array<double, 7> eigen7_ratios_p1() { return {1.33, 1.70, 1.0, 1.70, 1.12, 1.33, 1.0}; }
inline std::array<double, 7> eigen7_ratios_p2() { return {1.0, 1.81, 1.0, 1.81, 1.29, 1.0, 1.0}; }

// ---------------------------------------------------------------------------
// Congress feature tables
// ---------------------------------------------------------------------------

struct CongressRow {
    int degree_pp[4];     // (1,1) .. (4,4)-degree centralities
    double eigen[4];      // p-eigenvector centralities, p = 1..4
    double closeness;     // 1-closeness centrality
    bool attacker;        // SI labeling used by all quality computations
    bool alt_attacker;    // divergent labeling shipped with the closeness table
};

inline const std::array<CongressRow, 20>& congress_rows() {
    static const std::array<CongressRow, 20> rows = {{
        {{6, 5, 1, 0}, {1.421, 1.279, 0.913, 0.0}, 0.029, false, false},
        {{3, 2, 0, 0}, {0.962, 0.973, 0.0, 0.0}, 0.026, false, true},
        {{3, 1, 0, 0}, {0.663, 0.122, 0.0, 0.0}, 0.025, false, true},
        {{5, 6, 2, 0}, {1.384, 1.430, 1.338, 0.0}, 0.028, false, false},
        {{6, 5, 0, 0}, {1.442, 1.455, 0.0, 0.0}, 0.028, true, false},
        {{2, 1, 0, 0}, {0.648, 0.661, 0.0, 0.0}, 0.023, false, true},
        {{1, 0, 0, 0}, {0.298, 0.0, 0.0, 0.0}, 0.020, false, true},
        {{5, 7, 3, 0}, {1.564, 1.617, 1.760, 0.0}, 0.029, false, true},
        {{8, 12, 6, 0}, {1.935, 1.962, 2.134, 0.0}, 0.031, false, true},
        {{6, 3, 0, 0}, {0.908, 0.384, 0.0, 0.0}, 0.027, true, true},
        {{2, 0, 0, 0}, {0.421, 0.0, 0.0, 0.0}, 0.023, false, true},
        {{8, 9, 3, 0}, {1.828, 1.803, 1.564, 0.0}, 0.032, false, true},
        {{6, 8, 2, 0}, {1.643, 1.640, 1.299, 0.0}, 0.030, true, false},
        {{10, 14, 6, 0}, {2.380, 2.336, 2.293, 0.0}, 0.036, false, true},
        {{4, 2, 0, 0}, {0.772, 0.617, 0.0, 0.0}, 0.024, true, true},
        {{6, 6, 2, 0}, {1.601, 1.514, 1.475, 0.0}, 0.031, true, false},
        {{4, 4, 1, 0}, {1.321, 1.362, 1.238, 0.0}, 0.028, false, true},
        {{12, 21, 8, 0}, {2.816, 2.772, 2.565, 0.0}, 0.039, true, true},
        {{5, 3, 0, 0}, {1.014, 0.384, 0.0, 0.0}, 0.029, true, false},
        {{4, 5, 2, 0}, {1.187, 1.244, 1.381, 0.0}, 0.025, false, true},
    }};
    return rows;
}

/// All features of the congress dataset in one table: deg_pp_1..4, eig_1..4,
/// closeness_1. Individuals are "0".."19".
inline FeatureTable congress_feature_table() {
    FeatureTable tbl;
    const auto& rows = congress_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) tbl.add_individual(std::to_string(i));
    for (int p = 0; p < 4; ++p) {
        std::vector<double> col;
        for (const auto& row : rows) col.push_back(row.degree_pp[p]);
        tbl.add_feature("deg_pp_" + std::to_string(p + 1), std::move(col));
    }
    for (int p = 0; p < 4; ++p) {
        std::vector<double> col;
        for (const auto& row : rows) col.push_back(row.eigen[p]);
        tbl.add_feature("eig_" + std::to_string(p + 1), std::move(col));
    }
    std::vector<double> closeness;
    for (const auto& row : rows) closeness.push_back(row.closeness);
    tbl.add_feature("closeness_1", std::move(closeness));
    return tbl;
}

inline Target congress_attacker_target() {
    Target t;
    t.name = "attacker";
    const auto& rows = congress_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) t.labels[std::to_string(i)] = rows[i].attacker;
    return t;
}

inline Target congress_non_attacker_target() {
    Target t;
    t.name = "non_attacker";
    const auto& rows = congress_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) t.labels[std::to_string(i)] = !rows[i].attacker;
    return t;
}

/// The divergent labeling shipped with the closeness table (14 attackers);
/// kept verbatim but not used for quality computations.
inline Target congress_alt_attacker_target() {
    Target t;
    t.name = "alt_attacker";
    const auto& rows = congress_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.labels[std::to_string(i)] = rows[i].alt_attacker;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Reference quality values
// ---------------------------------------------------------------------------

/// One length-1 reference pattern with its expected gain quality (a = 0).
/// `computed` always follows from the tables above; for two entries the
/// published value disagrees with its own inputs and is kept in `published`.
struct ReferenceQuality {
    std::string label;
    Pattern pattern;
    bool against_attacker;  // false: non-attacker target
    Rational computed;
    std::optional<Rational> published;  // set only when it differs from computed
};

inline std::vector<ReferenceQuality> reference_qualities() {
    std::vector<ReferenceQuality> v;
    v.push_back({"deg_pp_1 < 4 vs non-attacker", Pattern{{"deg_pp_1", CmpOp::lt, 4.0}}, false,
                 Rational{7, 20}, std::nullopt});
    v.push_back({"deg_pp_2 < 2 vs non-attacker", Pattern{{"deg_pp_2", CmpOp::lt, 2.0}}, false,
                 Rational{7, 20}, std::nullopt});
    v.push_back({"deg_pp_3 < 1 vs non-attacker", Pattern{{"deg_pp_3", CmpOp::lt, 1.0}}, false,
                 Rational{-17, 180}, Rational{17, 180}});
    v.push_back({"deg_pp_1 > 5 vs attacker", Pattern{{"deg_pp_1", CmpOp::gt, 5.0}}, true,
                 Rational{37, 180}, std::nullopt});
    v.push_back({"deg_pp_2 > 14 vs attacker", Pattern{{"deg_pp_2", CmpOp::gt, 14.0}}, true,
                 Rational{13, 20}, std::nullopt});
    v.push_back({"deg_pp_3 > 7 vs attacker", Pattern{{"deg_pp_3", CmpOp::gt, 7.0}}, true,
                 Rational{13, 20}, std::nullopt});
    v.push_back({"eig_1 < 0.5 vs non-attacker", Pattern{{"eig_1", CmpOp::lt, 0.5}}, false,
                 Rational{7, 20}, std::nullopt});
    v.push_back({"eig_2 < 0.2 vs non-attacker", Pattern{{"eig_2", CmpOp::lt, 0.2}}, false,
                 Rational{7, 20}, std::nullopt});
    v.push_back({"eig_3 < 2 vs non-attacker", Pattern{{"eig_3", CmpOp::lt, 2.0}}, false,
                 Rational{-1, 340}, Rational{19, 340}});
    v.push_back({"eig_1 > 2.5 vs attacker", Pattern{{"eig_1", CmpOp::gt, 2.5}}, true,
                 Rational{13, 20}, std::nullopt});
    v.push_back({"eig_2 > 2.5 vs attacker", Pattern{{"eig_2", CmpOp::gt, 2.5}}, true,
                 Rational{13, 20}, std::nullopt});
    v.push_back({"eig_3 > 2.5 vs attacker", Pattern{{"eig_3", CmpOp::gt, 2.5}}, true,
                 Rational{13, 20}, std::nullopt});
    v.push_back({"closeness_1 < 0.024 vs non-attacker",
                 Pattern{{"closeness_1", CmpOp::lt, 0.024}}, false, Rational{7, 20}, std::nullopt});
    // The published support (13 individuals, share 6/13) counts the vertex at
    // exactly 0.027, hence the inclusive operator.
    v.push_back({"closeness_1 >= 0.027 vs attacker",
                 Pattern{{"closeness_1", CmpOp::ge, 0.027}}, true, Rational{29, 260},
                 std::nullopt});
    return v;
}

}  // namespace simplicial::fixtures
