#include <doctest.h>

#include "oracles.hpp"
#include "simplicial/adjacency.hpp"
#include "simplicial/fixtures.hpp"

using namespace simplicial;

namespace {

SimplicialComplex lone_triangle() { return SimplicialComplex::from_facets({Simplex{0, 1, 2}}); }

}  // namespace

TEST_CASE("faces of a tetrahedron are 3-upper adjacent") {
    const auto c = fixtures::tetrahedron_complex();
    CHECK(upper_adjacent(c, Simplex{0, 1}, Simplex{2, 3}, 3));
    CHECK(upper_adjacent(c, Simplex{0}, Simplex{1, 2, 3}, 3));
    CHECK(upper_adjacent(c, Simplex{0, 1, 2}, Simplex{0, 1, 3}, 3));
}

TEST_CASE("the two five-vertex facets are not p-upper adjacent for any p") {
    const auto c = fixtures::example5_complex();
    const Simplex a{1, 2, 3};
    const Simplex b{2, 4, 5};
    for (std::size_t p = 1; static_cast<int>(p) <= c.dim(); ++p) {
        CHECK_FALSE(upper_adjacent(c, a, b, p));
    }
}

TEST_CASE("graph adjacency is 1-upper adjacency") {
    const auto c = fixtures::example5_complex();
    CHECK(upper_adjacent(c, Simplex{1}, Simplex{2}, 1));
    CHECK(upper_adjacent(c, Simplex{4}, Simplex{5}, 1));
    CHECK_FALSE(upper_adjacent(c, Simplex{1}, Simplex{4}, 1));
    CHECK_FALSE(upper_adjacent(c, Simplex{3}, Simplex{5}, 1));
}

TEST_CASE("strict upper adjacency") {
    SUBCASE("an edge in no triangle is strictly 1-upper adjacent") {
        const auto c = SimplicialComplex::from_facets({Simplex{0, 1}});
        CHECK(strictly_upper_adjacent(c, Simplex{0}, Simplex{1}, 1));
    }
    SUBCASE("vertices of a triangle are not strictly 1-upper adjacent") {
        const auto c = lone_triangle();
        CHECK(upper_adjacent(c, Simplex{0}, Simplex{1}, 1));
        CHECK_FALSE(strictly_upper_adjacent(c, Simplex{0}, Simplex{1}, 1));
    }
    SUBCASE("at p = dim the strict version reduces to plain adjacency") {
        const auto c = fixtures::example5_complex();
        CHECK(strictly_upper_adjacent(c, Simplex{4}, Simplex{5}, 2));
    }
}

TEST_CASE("lower adjacency on the five-vertex example") {
    const auto c = fixtures::example5_complex();
    const Simplex a{1, 2, 3};
    const Simplex b{2, 4, 5};
    CHECK(lower_adjacent(c, a, b, 0));
    CHECK(strictly_lower_adjacent(c, a, b, 0));
    CHECK_FALSE(lower_adjacent(c, a, b, 1));

    SUBCASE("distinct vertices are never lower adjacent") {
        CHECK_FALSE(lower_adjacent(c, Simplex{1}, Simplex{2}, 0));
        CHECK_FALSE(lower_adjacent(c, Simplex{1}, Simplex{4}, 0));
    }
    SUBCASE("two triangles sharing an edge are 1-lower adjacent") {
        const auto two = SimplicialComplex::from_facets({Simplex{0, 1, 2}, Simplex{1, 2, 3}});
        CHECK(lower_adjacent(two, Simplex{0, 1, 2}, Simplex{1, 2, 3}, 1));
        CHECK_FALSE(strictly_lower_adjacent(two, Simplex{0, 1, 2}, Simplex{1, 2, 3}, 0));
    }
}

TEST_CASE("p-adjacency") {
    const auto c = fixtures::example5_complex();
    const Simplex a{1, 2, 3};
    const Simplex b{2, 4, 5};

    SUBCASE("the worked facet pair is 0-adjacent (p' = 4 is vacuous)") {
        CHECK(p_adjacent(c, a, b, 0));
    }
    SUBCASE("vertices are not p-adjacent") {
        CHECK_FALSE(p_adjacent(c, Simplex{1}, Simplex{2}, 0));
    }
    SUBCASE("two edges of a lone triangle are not 0-adjacent") {
        const auto t = lone_triangle();
        CHECK(strictly_lower_adjacent(t, Simplex{0, 1}, Simplex{1, 2}, 0));
        CHECK_FALSE(p_adjacent(t, Simplex{0, 1}, Simplex{1, 2}, 0));
        CHECK(oracles::p_adjacent(t, Simplex{0, 1}, Simplex{1, 2}, 0) ==
              p_adjacent(t, Simplex{0, 1}, Simplex{1, 2}, 0));
    }
}

TEST_CASE("maximal p-adjacency on the five-vertex example") {
    const auto c = fixtures::example5_complex();
    const Simplex a{1, 2, 3};
    CHECK(maximal_p_adjacent(c, a, Simplex{2, 4, 5}, 0));
    CHECK_FALSE(maximal_p_adjacent(c, a, Simplex{2, 4}, 0));
    CHECK_FALSE(maximal_p_adjacent(c, a, Simplex{4, 5}, 0));  // not even 0-adjacent
}

TEST_CASE("p-upper degree counts simplices of every dimension") {
    SUBCASE("lone triangle vertex at p = 2 has 6 partners") {
        const auto c = lone_triangle();
        CHECK(deg_upper_p(c, Simplex{0}, 2) == 6);
        CHECK(deg_upper_p(c, Simplex{0}, 2) == oracles::deg_upper_p(c, Simplex{0}, 2));
    }
    SUBCASE("isolated vertex has degree 0") {
        Graph g;
        g.add_vertex(7);
        g.add_edge(0, 1);
        const auto c = build_clique_complex(g);
        CHECK(deg_upper_p(c, Simplex{7}, 1) == 0);
    }
    SUBCASE("five-vertex example x1 at p = 2 counts the triangle's faces") {
        const auto c = fixtures::example5_complex();
        CHECK(deg_upper_p(c, Simplex{1}, 2) == oracles::deg_upper_p(c, Simplex{1}, 2));
        CHECK(deg_upper_p(c, Simplex{1}, 2) == 6);
    }
}

TEST_CASE("(h,p)-upper degrees") {
    const auto c = fixtures::example5_complex();
    SUBCASE("h beyond the complex dimension gives 0") {
        CHECK(deg_upper_hp(c, Simplex{1}, 3, 2) == 0);
    }
    SUBCASE("matches the brute-force recount") {
        for (std::size_t h = 1; h <= 2; ++h) {
            for (std::size_t p = 1; p <= 2; ++p) {
                CHECK(deg_upper_hp(c, Simplex{2}, h, p, false) ==
                      oracles::deg_upper_hp(c, Simplex{2}, h, p, false));
                CHECK(deg_upper_hp(c, Simplex{2}, h, p, true) ==
                      oracles::deg_upper_hp(c, Simplex{2}, h, p, true));
            }
        }
    }
}

TEST_CASE("maximal upper degree") {
    SUBCASE("tetrahedron vertex has a single strict coface") {
        CHECK(deg_upper_max(fixtures::tetrahedron_complex(), Simplex{0}) == 1);
    }
    SUBCASE("isolated vertex") {
        Graph g;
        g.add_vertex(0);
        CHECK(deg_upper_max(build_clique_complex(g), Simplex{0}) == 0);
    }
}

TEST_CASE("lower and adjacency degrees") {
    const auto c = fixtures::example5_complex();
    const Simplex facet{1, 2, 3};
    CHECK(deg_adj_p(c, facet, 0) == 3);
    CHECK(deg_adj_p(c, facet, 0) == oracles::deg_adj_p(c, facet, 0));
    CHECK(deg_adj_p_star(c, facet, 0) == oracles::deg_adj_p_star(c, facet, 0));

    SUBCASE("vertices have zero lower and adjacency degrees") {
        for (VertexId v : c.vertices()) {
            for (std::size_t p = 0; static_cast<int>(p) <= c.dim() - 1; ++p) {
                CHECK(deg_lower_p(c, Simplex{v}, p) == 0);
                CHECK(deg_adj_p(c, Simplex{v}, p) == 0);
            }
            CHECK(deg_star(c, Simplex{v}) == deg_upper_max(c, Simplex{v}));
        }
    }
}

TEST_CASE("adjacency preconditions are enforced") {
    const auto c = fixtures::example5_complex();
    CHECK_THROWS_AS(upper_adjacent(c, Simplex{1}, Simplex{1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(upper_adjacent(c, Simplex{1}, Simplex{9}, 1), std::invalid_argument);
    CHECK_THROWS_AS(upper_adjacent(c, Simplex{1}, Simplex{2}, 0), std::out_of_range);
    CHECK_THROWS_AS(upper_adjacent(c, Simplex{1}, Simplex{2}, 3), std::out_of_range);
    CHECK_THROWS_AS(lower_adjacent(c, Simplex{1, 2}, Simplex{2, 3}, 2), std::out_of_range);
    CHECK_THROWS_AS(deg_upper_hp(c, Simplex{1}, 0, 1), std::invalid_argument);
}
