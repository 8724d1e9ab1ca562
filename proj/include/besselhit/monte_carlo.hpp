#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "besselhit/bessel_process.hpp"

namespace besselhit {

enum class McEstimator { Indicator, Lemma22 };

std::string_view to_string(McEstimator estimator);

struct McConfig {
    std::int64_t paths = 400000;
    // Grid spacing on [0, t].
    double step = 0.01;
    // Simulation end for the nu > 0 indicator estimator; defaults to
    // kDefaultHorizonFactor * t. Other estimators stop at t.
    std::optional<double> horizon;
    std::uint64_t seed = 42;
    // Number of work blocks. Paths draw from per-path substreams, so neither
    // this nor `threads` changes the result.
    int streams = 64;
    // 0 selects std::thread::hardware_concurrency().
    int threads = 0;
    // Kill a path between grid points with the Brownian-bridge probability
    // exp(-2 (r0 - b)(r1 - b) / h). Off means grid-minimum detection only.
    bool bridge_correction = true;

    void validate() const;
};

inline constexpr double kDefaultHorizonFactor = 1e6;

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    // Population variance of the per-path payoff.
    double variance = 0.0;
    std::int64_t paths = 0;
    McEstimator estimator = McEstimator::Indicator;
    // Leading-order mass of paths hitting after the horizon, which the nu > 0
    // indicator cannot see. Zero for the other estimators.
    double horizon_truncation = 0.0;
};

using Engine = std::mt19937_64;

// Engine for path `index`, a pure function of (seed, index).
Engine path_engine(std::uint64_t seed, std::uint64_t index);

// One exact step of the squared Bessel process of dimension delta: X_{s+h}/h
// is noncentral chi-squared with delta degrees of freedom and noncentrality
// x/h. delta > 1 uses chi2_{delta-1} + (Z + sqrt(x/h))^2, delta <= 1 a Poisson
// mixture of central chi-squared laws.
double sample_squared_bessel_step(double x, double h, double delta, Engine& rng);

// nu > 0: P(t < tau_b < infinity) from paths that survive the grid on [0, t]
// and then reach b before the horizon. nu <= 0: P(tau_b > t).
McEstimate tail_mc_indicator(const BesselParams& params, double t, const McConfig& cfg);

// nu > 0 only: E[(b / R_t)^(2nu) ; min_{s <= t} R_s > b], which equals
// P(t < tau_b < infinity) and needs no simulation beyond t.
McEstimate tail_mc_lemma22(const BesselParams& params, double t, const McConfig& cfg);

}  // namespace besselhit
