#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplicial {

using VertexId = std::uint32_t;

/// A nonempty finite set of vertex ids, stored strictly ascending.
/// A simplex with k+1 vertices has dimension k.
class Simplex {
public:
    Simplex(std::initializer_list<VertexId> ids) : Simplex(std::vector<VertexId>(ids)) {}

    explicit Simplex(std::vector<VertexId> ids) : vertices_(std::move(ids)) {
        if (vertices_.empty()) {
            throw std::invalid_argument("simplex must have at least one vertex");
        }
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    }

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t dim() const noexcept { return vertices_.size() - 1; }

    bool contains(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// Face relation: true when other is a subset of this simplex.
    bool contains(const Simplex& other) const {
        return std::includes(vertices_.begin(), vertices_.end(),
                             other.vertices_.begin(), other.vertices_.end());
    }

    bool is_proper_subset_of(const Simplex& other) const {
        return size() < other.size() && other.contains(*this);
    }

    friend bool operator==(const Simplex& a, const Simplex& b) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

    std::string to_string() const {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i > 0) out << ',';
            out << vertices_[i];
        }
        out << '}';
        return out.str();
    }

private:
    std::vector<VertexId> vertices_;
};

inline std::size_t intersection_size(const Simplex& a, const Simplex& b) {
    std::size_t n = 0;
    auto ia = a.vertices().begin();
    auto ib = b.vertices().begin();
    while (ia != a.vertices().end() && ib != b.vertices().end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++n;
            ++ia;
            ++ib;
        }
    }
    return n;
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> merged;
    merged.reserve(a.size() + b.size());
    std::set_union(a.vertices().begin(), a.vertices().end(),
                   b.vertices().begin(), b.vertices().end(),
                   std::back_inserter(merged));
    return Simplex(std::move(merged));
}

/// All nonempty subsets of s, including s itself. 2^(k+1) - 1 faces.
inline std::vector<Simplex> all_subfaces(const Simplex& s) {
    const auto& vs = s.vertices();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << vs.size()) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << vs.size()); ++mask) {
        std::vector<VertexId> sub;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
        }
        out.emplace_back(std::move(sub));
    }
    return out;
}

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (VertexId v : s.vertices()) {
            h ^= std::hash<VertexId>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace simplicial
