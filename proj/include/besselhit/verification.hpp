#pragma once

#include <span>
#include <utility>
#include <vector>

#include "besselhit/bessel_process.hpp"
#include "besselhit/hitting_law.hpp"

namespace besselhit {

// Thresholds the checks below are judged against.
inline constexpr double kConstantTolerance = 0.02;
inline constexpr double kSlopeMargin = 0.05;
inline constexpr double kDualityTolerance = 1e-6;
inline constexpr double kBoundednessFactor = 2.0;

using Point = std::pair<double, double>;

// Ordinary least squares of log v against log t.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<Point> grid;
};

// Needs >= 4 points, t strictly increasing and v > 0; ParameterError otherwise.
SlopeFit fit_decay_slope(std::span<const Point> points);

// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);
// per_decade log-spaced points per decade from lo to hi inclusive.
std::vector<double> decade_grid(double lo, double hi, int per_decade);

// 8 points per decade on [1e2, 1e5].
std::vector<double> default_slope_grid();

struct ConstantRow {
    double t = 0.0;
    double tail = 0.0;
    double err = 0.0;
    // (2t)^|nu| Gamma(1+|nu|) tail
    double normalized = 0.0;
};

struct ConstantReport {
    BesselParams params;
    double target = 0.0;
    std::vector<ConstantRow> rows;
    // |normalized / target - 1| at the last grid point.
    double rel_deviation = 0.0;
    bool pass = false;
};

// Normalized inversion tail against b^(2nu)(1-(b/a)^(2nu)) (nu > 0) or
// a^(2|nu|)(1-(b/a)^(2|nu|)) (nu < 0). Pass iff the last point is within 2%.
ConstantReport check_constant(const BesselParams& params, std::span<const double> t_grid,
                              const InversionConfig& cfg = default_hitting_inversion());

struct SandwichRow {
    double t = 0.0;
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    bool ok = false;
};

struct SandwichReport {
    double nu = 0.0;
    double a = 0.0;
    double p = 0.0;
    std::vector<SandwichRow> rows;
    bool pass = false;
};

// lower <= E[R_t^(-2p)] <= upper at every grid point; grid must lie in [1, inf).
SandwichReport check_moment_sandwich(double nu, double a, double p,
                                     std::span<const double> t_grid);

struct RemainderRow {
    double t = 0.0;
    double tail = 0.0;
    double asymptote = 0.0;
    double difference = 0.0;
};

struct RemainderReport {
    BesselParams params;
    std::vector<RemainderRow> rows;
    SlopeFit fit;
    // -|nu| - 0.05
    double threshold = 0.0;
    bool pass = false;
};

// Log-log slope of |tail_inversion - asymptotic_tail|.
RemainderReport check_remainder_slope(const BesselParams& params, std::span<const double> t_grid,
                                      const InversionConfig& cfg = default_hitting_inversion());

struct DualityRow {
    double t = 0.0;
    double tail_negative = 0.0;  // P(tau_b > t) under -nu
    double tail_positive = 0.0;  // P(t < tau_b < inf) under nu
    double rel_error = 0.0;      // |tail_negative / (factor tail_positive) - 1|
};

struct DualityReport {
    BesselParams params;  // nu > 0
    double factor = 0.0;
    std::vector<DualityRow> rows;
    double max_rel_error = 0.0;
    bool pass = false;
};

DualityReport check_duality(const BesselParams& params, std::span<const double> t_grid,
                            const InversionConfig& cfg = default_hitting_inversion(),
                            double tolerance = kDualityTolerance);

struct BoundednessReport {
    BesselParams params;
    std::vector<Point> scaled;  // (t, t^|nu| tail)
    double max_over_min = 0.0;
    double max_over_last = 0.0;
    // max_over_min < 2
    bool pass = false;
};

BoundednessReport check_tail_boundedness(const BesselParams& params,
                                         std::span<const double> t_grid,
                                         const InversionConfig& cfg = default_hitting_inversion());

struct MonotonicityReport {
    BesselParams params;
    std::vector<double> lambdas;
    // differences[k-1][j] = (-1)^k Delta^k phi(lambda_j), k = 1..order
    std::vector<std::vector<double>> differences;
    bool pass = false;
};

// Forward differences of the transform on an evenly spaced lambda grid
// alternate in sign up to `order`, a necessary condition for phi to be the
// Laplace transform of a measure.
MonotonicityReport check_complete_monotonicity(const BesselParams& params, double lambda0,
                                               double spacing, int points, int order = 4);

}  // namespace besselhit
