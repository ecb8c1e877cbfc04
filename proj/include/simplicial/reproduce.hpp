#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "simplicial/adjacency.hpp"
#include "simplicial/centrality.hpp"
#include "simplicial/construct.hpp"
#include "simplicial/epidemic.hpp"
#include "simplicial/fixtures.hpp"
#include "simplicial/mining.hpp"

namespace simplicial {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

namespace detail {

inline void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
                  const std::string& detail = "") {
    out.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, detail});
}

inline void skip(std::vector<CheckResult>& out, const std::string& name,
                 const std::string& why) {
    out.push_back({name, CheckStatus::skipped, why});
}

inline bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool same_faces(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.dim() != b.dim()) return false;
    for (int d = 0; d <= a.dim(); ++d) {
        if (a.faces_of_dim(d) != b.faces_of_dim(d)) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fixture check suites
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> run_example5_checks() {
    using namespace fixtures;
    std::vector<CheckResult> out;
    const auto complex = example5_complex();

    detail::check(out, "clique complex has f-vector (5, 6, 2)",
                  complex.f_vector() == std::vector<std::size_t>{5, 6, 2});
    detail::check(out, "clique complex has dimension 2", complex.dim() == 2);
    detail::check(out, "facets are {1,2,3} and {2,4,5}",
                  complex.facets() == std::vector<Simplex>{Simplex{1, 2, 3}, Simplex{2, 4, 5}});

    const auto vr = build_vietoris_rips(example5_vr_points(), Metric::euclidean_d1, 3.0);
    detail::check(out, "Vietoris-Rips at r=3 equals the clique complex",
                  detail::same_faces(vr, complex));

    const auto tiny = build_vietoris_rips(example5_vr_points(), Metric::euclidean_d1, 0.5);
    detail::check(out, "radius below every pairwise distance gives dimension 0", tiny.dim() == 0);

    const auto pts = example5_figure_points();
    detail::check(out, "d1(x1,x2) = sqrt(10)/2",
                  detail::approx(pts.distance(1, 2, Metric::euclidean_d1), std::sqrt(10.0) / 2.0,
                                 1e-12));
    detail::check(out, "d2(x1,x2) = 3/2",
                  detail::approx(pts.distance(1, 2, Metric::chebyshev_d2), 1.5, 1e-12));
    detail::check(out, "d3(x1,x2) = 2",
                  detail::approx(pts.distance(1, 2, Metric::manhattan_d3), 2.0, 1e-12));

    detail::check(out, "faces of dimension 2 are the two triangles",
                  complex.faces_of_dim(2) ==
                      std::vector<Simplex>{Simplex{1, 2, 3}, Simplex{2, 4, 5}});
    detail::check(out, "cofaces of {2} in dimension 2 are both triangles",
                  complex.cofaces(Simplex{2}, 2).size() == 2);
    detail::check(out, "cofaces of {1} in dimension 1 are {1,2} and {1,3}",
                  complex.cofaces(Simplex{1}, 1) ==
                      std::vector<Simplex>{Simplex{1, 2}, Simplex{1, 3}});

    const Simplex left{1, 2, 3};
    const Simplex right{2, 4, 5};
    detail::check(out, "{1,2,3} and {2,4,5} are strictly 0-lower adjacent",
                  strictly_lower_adjacent(complex, left, right, 0));
    detail::check(out, "{1,2,3} and {2,4,5} are 0-adjacent", p_adjacent(complex, left, right, 0));
    bool never_upper = true;
    for (std::size_t p = 1; static_cast<int>(p) <= complex.dim(); ++p) {
        never_upper = never_upper && !upper_adjacent(complex, left, right, p);
    }
    detail::check(out, "{1,2,3} and {2,4,5} are not p-upper adjacent for any p", never_upper);
    detail::check(out, "0-adjacency degree of {1,2,3} is 3", deg_adj_p(complex, left, 0) == 3);
    detail::check(out, "{1,2,3} and {2,4,5} are maximal 0-adjacent",
                  maximal_p_adjacent(complex, left, right, 0));
    detail::check(out, "{1,2,3} and {2,4} are not maximal 0-adjacent",
                  !maximal_p_adjacent(complex, left, Simplex{2, 4}, 0));
    return out;
}

inline std::vector<CheckResult> run_two_complexes_checks() {
    using namespace fixtures;
    std::vector<CheckResult> out;

    const auto tetra = tetrahedron_complex();
    detail::check(out, "tetrahedron: strict (3,3)-degree of sigma1 is 1",
                  degree_centrality_pp(tetra, kTetraVertex, 3, true) == 1);
    detail::check(out, "tetrahedron: strict (2,2)-degree of sigma1 is 0",
                  degree_centrality_pp(tetra, kTetraVertex, 2, true) == 0);
    detail::check(out, "tetrahedron: maximal simplicial degree of sigma1 is 1",
                  max_simplicial_degree_centrality(tetra, kTetraVertex) == 1);
    detail::check(out, "tetrahedron: degree bound 3 * 3 = 9",
                  max_degree_bound(tetra, kTetraVertex) == 9);

    const auto wheel = wheel6_complex();
    detail::check(out, "wheel: strict (2,2)-degree of the hub is 6",
                  degree_centrality_pp(wheel, kWheelHub, 2, true) == 6);
    detail::check(out, "wheel: strict (3,3)-degree of the hub is 0",
                  degree_centrality_pp(wheel, kWheelHub, 3, true) == 0);
    detail::check(out, "wheel: maximal simplicial degree of the hub is 6",
                  max_simplicial_degree_centrality(wheel, kWheelHub) == 6);
    detail::check(out, "wheel: degree bound 6 * 2 = 12", max_degree_bound(wheel, kWheelHub) == 12);

    const auto nine = closeness9_complex();
    const auto harmonic = ClosenessVariant::harmonic;
    detail::check(out, "nine-vertex complex: harmonic 1-closeness of vertex 3 is 5",
                  detail::approx(closeness_centrality_p(nine, kClosenessVertex, 1, harmonic), 5.0,
                                 1e-12));
    detail::check(out, "nine-vertex complex: harmonic 2-closeness of vertex 3 is 5",
                  detail::approx(closeness_centrality_p(nine, kClosenessVertex, 2, harmonic), 5.0,
                                 1e-12));

    const auto pendant = closeness9_pendant_complex();
    const double c1 = closeness_centrality_p(pendant, kClosenessVertex, 1, harmonic);
    const double c2 = closeness_centrality_p(pendant, kClosenessVertex, 2, harmonic);
    const double cmax = max_closeness_centrality(pendant, kClosenessVertex, harmonic);
    detail::check(out, "pendant edge raises harmonic 1-closeness of vertex 3 to 6",
                  detail::approx(c1, 6.0, 1e-12));
    detail::check(out, "pendant edge leaves harmonic 2-closeness of vertex 3 at 5",
                  detail::approx(c2, 5.0, 1e-12));
    detail::check(out, "maximal closeness stays below 2 * (1-closeness)",
                  detail::approx(cmax, 11.0, 1e-12) && cmax < 2.0 * c1);
    return out;
}

inline std::vector<CheckResult> run_eigen7_checks() {
    using namespace fixtures;
    std::vector<CheckResult> out;
    const auto complex = eigen7_complex();

    const auto a1 = p_adjacency_matrix(complex, 1);
    const auto a2 = p_adjacency_matrix(complex, 2);
    const auto ref1 = eigen7_matrix_p1();
    const auto ref2 = eigen7_matrix_p2();
    bool m1 = true, m2 = true;
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            m1 = m1 && a1.entries[i][j] == ref1[i][j];
            m2 = m2 && a2.entries[i][j] == ref2[i][j];
        }
    }
    detail::check(out, "1-adjacency matrix matches the reference entry-for-entry", m1);
    detail::check(out, "2-adjacency matrix matches the reference entry-for-entry", m2);

    bool diff_ok = true;
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = 0; j < 7; ++j) {
            const bool expected = (i == 0 && j == 5) || (i == 5 && j == 0);
            diff_ok = diff_ok && ((a1.entries[i][j] != a2.entries[i][j]) == expected);
        }
    }
    detail::check(out, "matrices differ exactly in the entries (1,6) and (6,1)", diff_ok);

    detail::check(out, "complex is 2-upper connected", is_p_upper_connected(complex, 2));
    detail::check(out, "1-adjacency matrix is irreducible", is_irreducible(a1.entries));

    const auto e1 = eigenvector_centrality_p(complex, 1);
    const auto e2 = eigenvector_centrality_p(complex, 2);
    const auto r1 = eigen7_ratios_p1();
    const auto r2 = eigen7_ratios_p2();
    bool ok1 = true, ok2 = true;
    for (std::size_t i = 0; i < 7; ++i) {
        ok1 = ok1 && std::abs(e1.values[i] - r1[i]) <= 0.01 * r1[i];
        ok2 = ok2 && std::abs(e2.values[i] - r2[i]) <= 0.01 * r2[i];
    }
    detail::check(out, "1-eigenvector ratios match within 1%", ok1);
    detail::check(out, "2-eigenvector ratios match within 1%", ok2);

    const std::size_t i6 = complex.vertex_index(6);
    const std::size_t i4 = complex.vertex_index(4);
    detail::check(out, "vertex 6: 1-eigenvector exceeds 2-eigenvector",
                  e1.values[i6] > e2.values[i6]);
    detail::check(out, "vertex 4: 2-eigenvector exceeds 1-eigenvector",
                  e2.values[i4] > e1.values[i4]);
    return out;
}

inline std::vector<CheckResult> run_quality_checks() {
    using namespace fixtures;
    std::vector<CheckResult> out;
    const auto tbl = congress_feature_table();
    const auto attacker = congress_attacker_target();
    const auto non_attacker = congress_non_attacker_target();

    detail::check(out, "base rate of the non-attacker target is 13/20",
                  base_rate_fraction(tbl, non_attacker) == Rational{13, 20});
    detail::check(out, "base rate of the attacker target is 7/20",
                  base_rate_fraction(tbl, attacker) == Rational{7, 20});
    detail::check(out, "support of (deg_pp_1 < 4) is {1, 2, 5, 6, 10}",
                  support(tbl, Pattern{{"deg_pp_1", CmpOp::lt, 4.0}}) ==
                      std::vector<std::string>{"1", "2", "5", "6", "10"});

    for (const auto& ref : reference_qualities()) {
        const auto& target = ref.against_attacker ? attacker : non_attacker;
        const auto q = quality_detail(tbl, ref.pattern, target, QualitySpec{0.0});
        std::string note;
        if (ref.published) {
            note = "published value " + ref.published->to_string() +
                   " does not follow from the shipped tables; computed " +
                   ref.computed.to_string();
        }
        detail::check(out, "gain quality of " + ref.label + " is " + ref.computed.to_string(),
                      q.exact && *q.exact == ref.computed, note);
    }
    return out;
}

inline std::vector<CheckResult> run_congress_checks(const std::optional<Graph>& user_edges) {
    using namespace fixtures;
    std::vector<CheckResult> out;
    const auto tbl = congress_feature_table();
    const auto attacker = congress_attacker_target();
    const auto non_attacker = congress_non_attacker_target();

    detail::check(out, "attacker labeling marks 7 of 20 individuals",
                  base_rate_fraction(tbl, attacker) == Rational{7, 20});
    detail::check(out, "divergent closeness-table labeling marks 14 of 20 individuals",
                  base_rate_fraction(tbl, congress_alt_attacker_target()) == Rational{14, 20},
                  "recorded as shipped; quality computations use the 7-attacker labeling");

    {
        const auto scan = scan_thresholds(tbl, "deg_pp_1", CmpOp::lt, non_attacker, QualitySpec{0.0});
        detail::check(out, "threshold scan over deg_pp_1 (<, non-attacker) attains 7/20",
                      detail::approx(scan.quality, 7.0 / 20.0, 1e-12) && scan.support == 5);
    }
    {
        const auto scan = scan_thresholds(tbl, "deg_pp_2", CmpOp::lt, non_attacker, QualitySpec{0.0});
        detail::check(out, "threshold scan over deg_pp_2 (<, non-attacker) attains 7/20",
                      detail::approx(scan.quality, 7.0 / 20.0, 1e-12));
    }
    {
        const auto scan = scan_thresholds(tbl, "eig_1", CmpOp::gt, attacker, QualitySpec{0.0});
        detail::check(out, "threshold scan over eig_1 (>, attacker) attains 13/20",
                      detail::approx(scan.quality, 13.0 / 20.0, 1e-12) && scan.support == 1);
    }

    {
        double sum = 0.0;
        for (double v : tbl.column("deg_pp_1")) sum += v;
        const double lambda = sum / 20.0;
        detail::check(out, "average contact number from the (1,1)-degree column is 5.3",
                      detail::approx(lambda, 5.3, 1e-12));
        SIParams params;
        params.total = 20;
        params.initial_infected = 4;
        params.contact_probability = 0.2;
        params.contact_number = lambda;
        detail::check(out, "infection rate P*lambda/N is 0.053",
                      detail::approx(infection_rate(params), 0.053, 1e-12));
        const double g1 = expected_infected(params, 1.0);
        detail::check(out,
                      "one expected SI step reaches 4 individuals, not the 7 labeled attackers",
                      apply_rounding(g1, Rounding::nearest) == 4.0,
                      "the labeled attacker set is shipped verbatim, not re-simulated");
    }

    if (!user_edges) {
        detail::skip(out, "degree columns from the interaction network",
                     "no edge list supplied");
        detail::skip(out, "eigenvector columns from the interaction network",
                     "no edge list supplied");
        detail::skip(out, "closeness column from the interaction network",
                     "no edge list supplied");
        return out;
    }

    const auto complex = build_clique_complex(*user_edges);
    const auto& rows = congress_rows();

    bool degrees_ok = complex.vertex_count() == 20;
    for (VertexId v = 0; degrees_ok && v < 20; ++v) {
        for (std::size_t p = 1; p <= 4; ++p) {
            degrees_ok = degrees_ok && degree_centrality_pp(complex, v, p) ==
                                           static_cast<std::size_t>(rows[v].degree_pp[p - 1]);
        }
    }
    detail::check(out, "degree columns from the interaction network", degrees_ok);

    bool eigen_ok = complex.vertex_count() == 20;
    for (std::size_t p = 1; eigen_ok && p <= 4; ++p) {
        std::vector<double> table;
        for (const auto& row : rows) table.push_back(row.eigen[p - 1]);
        const bool table_all_zero =
            std::all_of(table.begin(), table.end(), [](double v) { return v == 0.0; });
        if (static_cast<int>(p) > complex.dim() || table_all_zero) {
            for (VertexId v = 0; v < 20; ++v) {
                const double computed =
                    static_cast<int>(p) > complex.dim()
                        ? 0.0
                        : eigenvector_centrality_p(complex, p).values[complex.vertex_index(v)];
                eigen_ok = eigen_ok && (table[v] != 0.0 || computed == 0.0);
            }
            continue;
        }
        const auto report = eigenvector_centrality_p(complex, p);
        const std::size_t ref =
            static_cast<std::size_t>(std::max_element(table.begin(), table.end()) - table.begin());
        if (report.values[ref] == 0.0) {
            eigen_ok = false;
            break;
        }
        const double scale = table[ref] / report.values[ref];
        for (VertexId v = 0; eigen_ok && v < 20; ++v) {
            const double computed = report.values[complex.vertex_index(v)];
            if (table[v] == 0.0) {
                eigen_ok = computed == 0.0;
            } else {
                eigen_ok = std::abs(computed * scale - table[v]) <= 0.01 * table[v];
            }
        }
    }
    detail::check(out, "eigenvector columns from the interaction network", eigen_ok);

    bool closeness_ok = complex.vertex_count() == 20;
    for (VertexId v = 0; closeness_ok && v < 20; ++v) {
        const double computed =
            closeness_centrality_p(complex, v, 1, ClosenessVariant::reciprocal_of_sum);
        closeness_ok = std::abs(computed - rows[v].closeness) <= 0.0005;
    }
    detail::check(out, "closeness column from the interaction network", closeness_ok);
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "example-2.2", "two-complexes", "eigenvector-7", "congress-tables", "quality-values"};
    return names;
}

inline std::vector<CheckResult> run_fixture(const std::string& name,
                                            const std::optional<Graph>& user_edges = std::nullopt) {
    if (name == "example-2.2") return run_example5_checks();
    if (name == "two-complexes") return run_two_complexes_checks();
    if (name == "eigenvector-7") return run_eigen7_checks();
    if (name == "congress-tables") return run_congress_checks(user_edges);
    if (name == "quality-values") return run_quality_checks();
    std::ostringstream msg;
    msg << "unknown fixture '" << name << "'; available:";
    for (const auto& n : fixture_names()) msg << ' ' << n;
    throw std::invalid_argument(msg.str());
}

}  // namespace simplicial
