#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "simplicial/complex.hpp"

namespace simplicial {

namespace detail {

inline void require_member(const SimplicialComplex& c, const Simplex& s) {
    if (!c.contains(s)) {
        throw std::invalid_argument("simplex " + s.to_string() + " not in complex");
    }
}

inline void require_distinct(const Simplex& a, const Simplex& b) {
    if (a == b) throw std::invalid_argument("adjacency is defined for distinct simplices");
}

inline void require_upper_p(const SimplicialComplex& c, std::size_t p) {
    if (p < 1 || static_cast<int>(p) > c.dim()) {
        throw std::out_of_range("upper adjacency parameter p=" + std::to_string(p) +
                                " outside [1, dim=" + std::to_string(c.dim()) + "]");
    }
}

inline void require_lower_p(const SimplicialComplex& c, std::size_t p) {
    if (c.dim() < 1 || static_cast<int>(p) > c.dim() - 1) {
        throw std::out_of_range("lower adjacency parameter p=" + std::to_string(p) +
                                " outside [0, dim-1=" + std::to_string(c.dim() - 1) + "]");
    }
}

// Unchecked core: some p-simplex of c has both a and b as faces.
inline bool upper_adjacent_raw(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                               std::size_t p) {
    const Simplex joined = simplex_union(a, b);
    if (joined.dim() > p) return false;
    if (!c.contains(joined)) return false;
    if (joined.dim() == p) return true;
    for (const Simplex& f : c.faces_of_dim(p)) {
        if (f.contains(joined)) return true;
    }
    return false;
}

// Adjacency above dim(c) is trivially false.
inline bool upper_adjacent_or_false(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                                    std::size_t p) {
    if (p < 1 || static_cast<int>(p) > c.dim()) return false;
    return upper_adjacent_raw(c, a, b, p);
}

}  // namespace detail

/// True iff some p-simplex of c contains both a and b.
inline bool upper_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                           std::size_t p) {
    detail::require_distinct(a, b);
    detail::require_member(c, a);
    detail::require_member(c, b);
    detail::require_upper_p(c, p);
    return detail::upper_adjacent_raw(c, a, b, p);
}

/// Upper adjacent at p but not at p+1 (adjacency at dim(c)+1 is trivially false).
inline bool strictly_upper_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                                    std::size_t p) {
    return upper_adjacent(c, a, b, p) && !detail::upper_adjacent_or_false(c, a, b, p + 1);
}

/// True iff some p-simplex of c is a common face of a and b. With downward
/// closure this is exactly |a intersect b| >= p+1. Vertices are never lower
/// adjacent to anything; see deg_lower_p.
inline bool lower_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                           std::size_t p) {
    detail::require_distinct(a, b);
    detail::require_member(c, a);
    detail::require_member(c, b);
    detail::require_lower_p(c, p);
    if (a.dim() == 0 || b.dim() == 0) return false;
    return intersection_size(a, b) >= p + 1;
}

/// Lower adjacent at p but not at p+1: the common face has dimension exactly p.
inline bool strictly_lower_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                                    std::size_t p) {
    detail::require_distinct(a, b);
    detail::require_member(c, a);
    detail::require_member(c, b);
    detail::require_lower_p(c, p);
    if (a.dim() == 0 || b.dim() == 0) return false;
    return intersection_size(a, b) == p + 1;
}

/// Strictly p-lower adjacent and not p'-upper adjacent for p' = dim a + dim b - p.
/// When p' falls outside [1, dim c] the upper clause is vacuously satisfied.
inline bool p_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                       std::size_t p) {
    if (!strictly_lower_adjacent(c, a, b, p)) return false;
    const std::size_t pp = a.dim() + b.dim() - p;
    return !detail::upper_adjacent_or_false(c, a, b, pp);
}

/// p-adjacent, and b is not properly contained in any other p-adjacent partner of a.
inline bool maximal_p_adjacent(const SimplicialComplex& c, const Simplex& a, const Simplex& b,
                               std::size_t p) {
    if (!p_adjacent(c, a, b, p)) return false;
    for (std::size_t d = b.dim() + 1; static_cast<int>(d) <= c.dim(); ++d) {
        for (const Simplex& other : c.faces_of_dim(d)) {
            if (other != a && b.is_proper_subset_of(other) && p_adjacent(c, a, other, p)) {
                return false;
            }
        }
    }
    return true;
}

/// Number of simplices of any dimension that are p-upper adjacent to s.
inline std::size_t deg_upper_p(const SimplicialComplex& c, const Simplex& s, std::size_t p) {
    detail::require_member(c, s);
    detail::require_upper_p(c, p);
    std::size_t count = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        for (const Simplex& other : c.faces_of_dim(static_cast<std::size_t>(d))) {
            if (other != s && detail::upper_adjacent_raw(c, s, other, p)) ++count;
        }
    }
    return count;
}

/// Number of (dim s + h)-simplices p-upper adjacent (strict: strictly so) to s.
/// p beyond dim(c) yields 0 rather than an error, so degree columns can be
/// tabulated for a uniform p range.
inline std::size_t deg_upper_hp(const SimplicialComplex& c, const Simplex& s, std::size_t h,
                                std::size_t p, bool strict = false) {
    detail::require_member(c, s);
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    if (p < 1) throw std::out_of_range("upper adjacency parameter p must be >= 1");
    if (static_cast<int>(p) > c.dim()) return 0;
    std::size_t count = 0;
    for (const Simplex& other : c.faces_of_dim(s.dim() + h)) {
        if (other == s || !detail::upper_adjacent_raw(c, s, other, p)) continue;
        if (strict && detail::upper_adjacent_or_false(c, s, other, p + 1)) continue;
        ++count;
    }
    return count;
}

/// Maximal simplicial upper degree: sum over h of the strict (h, dim s + h)-upper degrees.
inline std::size_t deg_upper_max(const SimplicialComplex& c, const Simplex& s) {
    detail::require_member(c, s);
    std::size_t total = 0;
    for (std::size_t h = 1; static_cast<int>(s.dim() + h) <= c.dim(); ++h) {
        total += deg_upper_hp(c, s, h, s.dim() + h, /*strict=*/true);
    }
    return total;
}

/// Number of simplices p-lower adjacent to s. A vertex has lower degree 0 for
/// every p: a 0-simplex has no face other than itself to act as the shared
/// witness, so counting its cofaces here would contradict deg_star(v) being
/// carried by upper adjacency alone.
inline std::size_t deg_lower_p(const SimplicialComplex& c, const Simplex& s, std::size_t p) {
    detail::require_member(c, s);
    detail::require_lower_p(c, p);
    if (s.dim() == 0) return 0;
    std::size_t count = 0;
    for (int d = 1; d <= c.dim(); ++d) {
        for (const Simplex& other : c.faces_of_dim(static_cast<std::size_t>(d))) {
            if (other != s && intersection_size(s, other) >= p + 1) ++count;
        }
    }
    return count;
}

/// Number of simplices p-adjacent to s.
inline std::size_t deg_adj_p(const SimplicialComplex& c, const Simplex& s, std::size_t p) {
    detail::require_member(c, s);
    detail::require_lower_p(c, p);
    std::size_t count = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        for (const Simplex& other : c.faces_of_dim(static_cast<std::size_t>(d))) {
            if (other != s && p_adjacent(c, s, other, p)) ++count;
        }
    }
    return count;
}

/// Number of simplices maximally p-adjacent to s.
inline std::size_t deg_adj_p_star(const SimplicialComplex& c, const Simplex& s, std::size_t p) {
    detail::require_member(c, s);
    detail::require_lower_p(c, p);
    std::size_t count = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        for (const Simplex& other : c.faces_of_dim(static_cast<std::size_t>(d))) {
            if (other != s && maximal_p_adjacent(c, s, other, p)) ++count;
        }
    }
    return count;
}

/// Sum of maximal p-adjacency degrees over p = 0 .. dim s - 1 (0 for vertices).
inline std::size_t deg_adj_star(const SimplicialComplex& c, const Simplex& s) {
    detail::require_member(c, s);
    std::size_t total = 0;
    for (std::size_t p = 0; p < s.dim(); ++p) total += deg_adj_p_star(c, s, p);
    return total;
}

/// Maximal simplicial degree: deg_adj_star + deg_upper_max.
inline std::size_t deg_star(const SimplicialComplex& c, const Simplex& s) {
    return deg_adj_star(c, s) + deg_upper_max(c, s);
}

}  // namespace simplicial
