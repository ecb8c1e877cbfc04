#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "simplicial/simplex.hpp"

namespace simplicial {

/// A finite abstract simplicial complex: a family of simplices closed under
/// taking nonempty subsets, indexed by dimension. Immutable after construction;
/// all queries are read-only and safe to call concurrently.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds a complex from an arbitrary family of faces. Missing subfaces
    /// are added so that downward closure always holds.
    static SimplicialComplex from_faces(const std::vector<Simplex>& faces) {
        SimplicialComplex c;
        for (const Simplex& f : faces) {
            if (c.membership_.insert(f).second) c.insert_into_index(f);
            for (Simplex& sub : all_subfaces(f)) {
                if (c.membership_.insert(sub).second) c.insert_into_index(std::move(sub));
            }
        }
        c.finalize();
        return c;
    }

    static SimplicialComplex from_facets(std::initializer_list<Simplex> facets) {
        return from_faces(std::vector<Simplex>(facets));
    }

    /// Highest dimension of any face; -1 for the empty complex.
    int dim() const noexcept { return static_cast<int>(faces_by_dim_.size()) - 1; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    /// Vertex ids in ascending order; also the row order of adjacency matrices.
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }

    bool contains(const Simplex& s) const { return membership_.contains(s); }

    /// Faces of dimension exactly k, sorted; empty for k > dim.
    const std::vector<Simplex>& faces_of_dim(std::size_t k) const {
        static const std::vector<Simplex> empty;
        return k < faces_by_dim_.size() ? faces_by_dim_[k] : empty;
    }

    /// Inclusion-maximal faces.
    const std::vector<Simplex>& facets() const noexcept { return facets_; }

    /// All k-simplices of the complex that contain s. Requires s in the
    /// complex and k >= dim(s).
    std::vector<Simplex> cofaces(const Simplex& s, std::size_t k) const {
        if (!contains(s)) {
            throw std::invalid_argument("cofaces: simplex " + s.to_string() + " not in complex");
        }
        if (k < s.dim()) {
            throw std::invalid_argument("cofaces: requested dimension below dim(simplex)");
        }
        std::vector<Simplex> out;
        for (const Simplex& f : faces_of_dim(k)) {
            if (f.contains(s)) out.push_back(f);
        }
        return out;
    }

    /// Face counts per dimension: (f_0, f_1, ..., f_dim).
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> fv;
        fv.reserve(faces_by_dim_.size());
        for (const auto& layer : faces_by_dim_) fv.push_back(layer.size());
        return fv;
    }

    std::size_t face_count() const noexcept { return membership_.size(); }

    /// Position of v in the ascending vertex order.
    std::size_t vertex_index(VertexId v) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in complex");
        }
        return static_cast<std::size_t>(it - vertices_.begin());
    }

private:
    void insert_into_index(Simplex f) {
        const std::size_t d = f.dim();
        if (faces_by_dim_.size() <= d) faces_by_dim_.resize(d + 1);
        faces_by_dim_[d].push_back(std::move(f));
    }

    void finalize() {
        for (auto& layer : faces_by_dim_) std::sort(layer.begin(), layer.end());
        vertices_.clear();
        if (!faces_by_dim_.empty()) {
            for (const Simplex& v : faces_by_dim_[0]) vertices_.push_back(v.vertices()[0]);
        }
        facets_.clear();
        for (std::size_t d = 0; d < faces_by_dim_.size(); ++d) {
            const auto* above = d + 1 < faces_by_dim_.size() ? &faces_by_dim_[d + 1] : nullptr;
            for (const Simplex& f : faces_by_dim_[d]) {
                bool maximal = true;
                if (above) {
                    for (const Simplex& g : *above) {
                        if (g.contains(f)) {
                            maximal = false;
                            break;
                        }
                    }
                }
                if (maximal) facets_.push_back(f);
            }
        }
    }

    std::vector<std::vector<Simplex>> faces_by_dim_;
    std::unordered_set<Simplex, SimplexHash> membership_;
    std::vector<Simplex> facets_;
    std::vector<VertexId> vertices_;
};

}  // namespace simplicial
