#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simplicial/simplex.hpp"

namespace simplicial {

/// Distance choices for Vietoris-Rips construction.
///   d1 Euclidean, d2 Chebyshev, d3 Manhattan,
///   d4 1/e for a recorded exchange of size e, 2 otherwise,
///   d5 0 for a recorded exchange, 1 otherwise.
enum class Metric { euclidean_d1, chebyshev_d2, manhattan_d3, exchange_size_d4, exchange_flag_d5 };

inline std::optional<Metric> parse_metric(const std::string& name) {
    if (name == "d1") return Metric::euclidean_d1;
    if (name == "d2") return Metric::chebyshev_d2;
    if (name == "d3") return Metric::manhattan_d3;
    if (name == "d4") return Metric::exchange_size_d4;
    if (name == "d5") return Metric::exchange_flag_d5;
    return std::nullopt;
}

inline std::string metric_name(Metric m) {
    switch (m) {
        case Metric::euclidean_d1: return "d1";
        case Metric::chebyshev_d2: return "d2";
        case Metric::manhattan_d3: return "d3";
        case Metric::exchange_size_d4: return "d4";
        case Metric::exchange_flag_d5: return "d5";
    }
    return "?";
}

/// Points in R^n addressed by vertex id, plus optional pairwise exchange
/// records backing the data-exchange metrics d4 and d5.
class PointCloud {
public:
    void add_point(VertexId id, std::vector<double> coords) {
        if (points_.contains(id)) {
            throw std::invalid_argument("duplicate point id " + std::to_string(id));
        }
        if (!points_.empty() && coords.size() != dimension_) {
            throw std::invalid_argument("point " + std::to_string(id) + " has " +
                                        std::to_string(coords.size()) + " coordinates, expected " +
                                        std::to_string(dimension_));
        }
        dimension_ = coords.size();
        points_.emplace(id, std::move(coords));
    }

    /// Records a possible data exchange of the given size between u and v.
    void record_exchange(VertexId u, VertexId v, double size) {
        if (size <= 0.0) {
            throw std::invalid_argument("exchange size must be positive");
        }
        exchange_size_[ordered(u, v)] = size;
        exchange_flag_.insert(ordered(u, v));
    }

    bool has_exchange_data() const noexcept { return !exchange_flag_.empty(); }
    bool has_exchange(VertexId u, VertexId v) const { return exchange_flag_.contains(ordered(u, v)); }

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }

    std::vector<VertexId> ids() const {
        std::vector<VertexId> out;
        out.reserve(points_.size());
        for (const auto& [id, _] : points_) out.push_back(id);
        return out;
    }

    const std::vector<double>& coords(VertexId id) const {
        auto it = points_.find(id);
        if (it == points_.end()) {
            throw std::invalid_argument("unknown point id " + std::to_string(id));
        }
        return it->second;
    }

    double distance(VertexId u, VertexId v, Metric metric) const {
        switch (metric) {
            case Metric::euclidean_d1:
            case Metric::chebyshev_d2:
            case Metric::manhattan_d3: {
                const auto& a = coords(u);
                const auto& b = coords(v);
                double acc = 0.0;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const double d = std::abs(b[i] - a[i]);
                    if (metric == Metric::euclidean_d1) {
                        acc += d * d;
                    } else if (metric == Metric::chebyshev_d2) {
                        acc = std::max(acc, d);
                    } else {
                        acc += d;
                    }
                }
                return metric == Metric::euclidean_d1 ? std::sqrt(acc) : acc;
            }
            case Metric::exchange_size_d4: {
                require_exchange_data("d4");
                auto it = exchange_size_.find(ordered(u, v));
                return it != exchange_size_.end() ? 1.0 / it->second : 2.0;
            }
            case Metric::exchange_flag_d5: {
                require_exchange_data("d5");
                return exchange_flag_.contains(ordered(u, v)) ? 0.0 : 1.0;
            }
        }
        throw std::logic_error("unhandled metric");
    }

private:
    static std::pair<VertexId, VertexId> ordered(VertexId u, VertexId v) {
        return u < v ? std::pair{u, v} : std::pair{v, u};
    }

    void require_exchange_data(const char* which) const {
        if (exchange_flag_.empty()) {
            throw std::invalid_argument(std::string("metric ") + which +
                                        " requires exchange data, none recorded");
        }
    }

    std::map<VertexId, std::vector<double>> points_;
    std::size_t dimension_ = 0;
    std::map<std::pair<VertexId, VertexId>, double> exchange_size_;
    std::set<std::pair<VertexId, VertexId>> exchange_flag_;
};

}  // namespace simplicial
