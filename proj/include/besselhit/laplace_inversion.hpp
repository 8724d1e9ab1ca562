#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "besselhit/errors.hpp"
#include "besselhit/precision.hpp"

namespace besselhit {

// Gaver-Stehfest inversion of Laplace transforms sampled on the positive
// real axis.
struct InversionConfig {
    int order = 14;
    // Two orders whose results are compared for the error estimate; the
    // larger one must equal `order`.
    std::array<int, 2> ladder{12, 14};
    Precision precision = Precision::Double;

    void validate() const;

    // Ladder (low, high) evaluated in quad precision.
    static InversionConfig extended(int low = 24, int high = 28);
};

inline constexpr int kMinStehfestOrder = 4;
inline constexpr int kMaxStehfestOrderDouble = 20;
inline constexpr int kMaxStehfestOrderExtended = 32;

int max_stehfest_order(Precision precision);

struct InversionResult {
    double value = 0.0;
    double err = 0.0;
};

using Transform = std::function<double(double)>;
using ExtendedTransform = std::function<Extended(const Extended&)>;

// Weights V_1..V_order, computed in exact rational arithmetic and rounded
// once. Orders up to kMaxStehfestOrderExtended are accepted.
std::vector<double> stehfest_weights(int order);
const std::vector<Extended>& stehfest_weights_extended(int order);
const std::vector<double>& stehfest_weights_double(int order);

// Result from the high rung, err = |high - low|. Throws InstabilityError when
// err > 1e-3 * max(|value|, 1e-12). The double overload requires
// Precision::Double.
InversionResult invert(const Transform& phi, double t, const InversionConfig& cfg = {});
InversionResult invert(const ExtendedTransform& phi, double t, const InversionConfig& cfg);

// Both rungs without an acceptance check, for callers with their own rule.
std::array<Extended, 2> invert_ladder(const ExtendedTransform& phi, double t,
                                      const InversionConfig& cfg);
std::array<double, 2> invert_ladder(const Transform& phi, double t, const InversionConfig& cfg);

namespace detail {

template <class Real>
const std::vector<Real>& weights_for(int order);

template <>
inline const std::vector<double>& weights_for<double>(int order) {
    return stehfest_weights_double(order);
}

template <>
inline const std::vector<Extended>& weights_for<Extended>(int order) {
    return stehfest_weights_extended(order);
}

// Shares the transform samples k ln2 / t between the two rungs.
template <class Real, class Fn>
std::array<Real, 2> stehfest_ladder(Fn&& phi, const Real& t, int low, int high) {
    using std::log;
    const int n = std::max(low, high);
    const Real step = log(Real(2)) / t;
    std::vector<Real> samples(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        samples[static_cast<std::size_t>(k - 1)] = phi(Real(k) * step);
    }
    auto rung = [&](int order) {
        const auto& w = weights_for<Real>(order);
        Real acc = 0;
        for (int k = 0; k < order; ++k) {
            acc += w[static_cast<std::size_t>(k)] * samples[static_cast<std::size_t>(k)];
        }
        return acc * step;
    };
    return {rung(low), rung(high)};
}

}  // namespace detail

}  // namespace besselhit
