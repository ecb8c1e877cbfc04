#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplicial/graph.hpp"

namespace simplicial {

enum class Rounding { floor, nearest, ceil };

inline std::optional<Rounding> parse_rounding(const std::string& name) {
    if (name == "floor") return Rounding::floor;
    if (name == "round") return Rounding::nearest;
    if (name == "ceil") return Rounding::ceil;
    return std::nullopt;
}

inline double apply_rounding(double x, Rounding r) {
    switch (r) {
        case Rounding::floor: return std::floor(x);
        case Rounding::nearest: return std::floor(x + 0.5);  // half-up
        case Rounding::ceil: return std::ceil(x);
    }
    return x;
}

/// Parameters of the susceptible-infectious model. The infection reproducing
/// rate is r = P * lambda / N unless overridden, lambda being the average
/// contact number (the average (1,1)-degree of the network).
struct SIParams {
    std::size_t total = 0;                      // N
    std::size_t initial_infected = 0;           // g(0)
    double contact_probability = 0.0;           // P in [0,1]
    std::optional<double> contact_number;       // lambda
    std::optional<double> rate_override;        // explicit r
    Rounding rounding = Rounding::nearest;

    void validate() const {
        if (total == 0) throw std::invalid_argument("N must be positive");
        if (initial_infected == 0 || initial_infected > total) {
            throw std::invalid_argument("g(0) must satisfy 0 < g(0) <= N");
        }
        if (contact_probability < 0.0 || contact_probability > 1.0) {
            throw std::invalid_argument("P must lie in [0,1]");
        }
        if (!rate_override && !contact_number) {
            throw std::invalid_argument("either lambda or an explicit rate is required");
        }
    }
};

/// Average (1,1)-degree of the graph's vertices (the average contact number).
inline double mean_contact_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

/// Infection reproducing rate r = P * lambda / N, or the explicit override.
/// Rejects degenerate configurations with r <= 0.
inline double infection_rate(const SIParams& params) {
    params.validate();
    double r;
    if (params.rate_override) {
        r = *params.rate_override;
    } else {
        if (*params.contact_number <= 0.0) {
            throw std::invalid_argument("lambda must be positive without a rate override");
        }
        r = params.contact_probability * *params.contact_number / static_cast<double>(params.total);
    }
    if (r <= 0.0) throw std::invalid_argument("infection rate must be positive");
    return r;
}

/// Closed-form expected infectious count g(t) = N / (1 + (N/g0 - 1) e^{-rt}).
inline double expected_infected(const SIParams& params, double t) {
    const double r = infection_rate(params);
    const double n = static_cast<double>(params.total);
    const double c = n / static_cast<double>(params.initial_infected) - 1.0;
    return n / (1.0 + c * std::exp(-r * t));
}

/// Closed-form expected susceptible count, the logistic decay with f(0) =
/// N - g0: f(t) = N / (1 + (N/f(0) - 1) e^{rt}). Satisfies f(t) + g(t) = N
/// exactly.
inline double expected_susceptible(const SIParams& params, double t) {
    const double r = infection_rate(params);
    const double n = static_cast<double>(params.total);
    const double f0 = n - static_cast<double>(params.initial_infected);
    if (f0 == 0.0) return 0.0;
    const double c = n / f0 - 1.0;
    return n / (1.0 + c * std::exp(r * t));
}

/// Population split at one time step. infectious and susceptible partition
/// the vertex set.
struct SIState {
    std::set<VertexId> infectious;
    std::set<VertexId> susceptible;
    std::size_t t = 0;
    bool stalled = false;  // positive target with no infectious vertex or no candidates
};

namespace detail {

// Deterministic sample of k elements without replacement (partial Fisher-Yates).
inline std::vector<VertexId> sample_without_replacement(std::vector<VertexId> pool, std::size_t k,
                                                        std::mt19937_64& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

inline SIState step(const Graph& g, const SIState& state, const SIParams& params,
                    std::mt19937_64& rng) {
    SIState next = state;
    next.t = state.t + 1;
    next.stalled = false;

    const double target_total =
        apply_rounding(expected_infected(params, static_cast<double>(next.t)), params.rounding);
    const double current = static_cast<double>(state.infectious.size());
    std::size_t to_infect = target_total > current
                                ? static_cast<std::size_t>(target_total - current)
                                : 0;
    if (to_infect == 0) return next;

    if (state.infectious.empty()) {
        next.stalled = true;
        return next;
    }

    // Susceptible vertices adjacent to at least one infectious vertex.
    std::vector<VertexId> candidates;
    for (VertexId v : state.susceptible) {
        for (VertexId nb : g.neighbors(v)) {
            if (state.infectious.contains(nb)) {
                candidates.push_back(v);
                break;
            }
        }
    }
    if (candidates.empty()) {
        next.stalled = true;
        return next;
    }
    if (to_infect > candidates.size()) to_infect = candidates.size();

    for (VertexId v : sample_without_replacement(std::move(candidates), to_infect, rng)) {
        next.infectious.insert(v);
        next.susceptible.erase(v);
    }
    return next;
}

}  // namespace detail

/// One synchronous spreading step: infects round(g(t+1)) - |infectious| new
/// vertices chosen uniformly among susceptible neighbors of the infectious
/// set. Deterministic for a fixed seed.
inline SIState simulate_step(const Graph& g, const SIState& state, const SIParams& params,
                             std::uint64_t rng_seed) {
    params.validate();
    std::mt19937_64 rng(rng_seed);
    return detail::step(g, state, params, rng);
}

/// Uniformly random start population of g(0) infectious vertices.
inline SIState initial_state(const Graph& g, const SIParams& params, std::mt19937_64& rng) {
    params.validate();
    const auto vs = g.vertices();
    if (vs.size() != params.total) {
        throw std::invalid_argument("params.total must equal the graph's vertex count");
    }
    SIState state;
    for (VertexId v :
         detail::sample_without_replacement(vs, params.initial_infected, rng)) {
        state.infectious.insert(v);
    }
    for (VertexId v : vs) {
        if (!state.infectious.contains(v)) state.susceptible.insert(v);
    }
    return state;
}

/// Runs `steps` spreading steps from a random start population; returns every
/// state including the initial one. Infectious counts never decrease.
inline std::vector<SIState> run(const Graph& g, const SIParams& params, std::size_t steps,
                                std::uint64_t rng_seed) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    std::mt19937_64 rng(rng_seed);
    std::vector<SIState> trajectory;
    trajectory.push_back(initial_state(g, params, rng));
    for (std::size_t i = 0; i < steps; ++i) {
        trajectory.push_back(detail::step(g, trajectory.back(), params, rng));
    }
    return trajectory;
}

}  // namespace simplicial
