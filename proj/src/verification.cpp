#include "besselhit/verification.hpp"

#include <algorithm>
#include <cmath>

namespace besselhit {

namespace {

void check_grid(std::span<const double> t_grid, const char* who) {
    if (t_grid.empty()) {
        throw ParameterError(std::string(who) + ": empty t grid");
    }
}

}  // namespace

SlopeFit fit_decay_slope(std::span<const Point> points) {
    if (points.size() < 4) {
        throw ParameterError("fit_decay_slope: needs at least 4 points");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0)) {
            throw ParameterError("fit_decay_slope: t and v must be > 0");
        }
        if (i > 0 && !(points[i].first > points[i - 1].first)) {
            throw ParameterError("fit_decay_slope: t must be strictly increasing");
        }
    }
    const double n = static_cast<double>(points.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [t, v] : points) {
        mx += std::log(t);
        my += std::log(v);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& [t, v] : points) {
        const double dx = std::log(t) - mx;
        const double dy = std::log(v) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
    fit.grid.assign(points.begin(), points.end());
    return fit;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw ParameterError("log_grid: needs 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    // Base 10 so that decade grids hit powers of ten exactly.
    const double llo = std::log10(lo);
    const double step = (std::log10(hi) - llo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = std::pow(10.0, llo + step * i);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> decade_grid(double lo, double hi, int per_decade) {
    if (per_decade < 1) {
        throw ParameterError("decade_grid: per_decade must be >= 1");
    }
    const double decades = std::log10(hi / lo);
    const int n = static_cast<int>(std::lround(decades * per_decade)) + 1;
    return log_grid(lo, hi, n);
}

std::vector<double> default_slope_grid() { return decade_grid(1e2, 1e5, 8); }

ConstantReport check_constant(const BesselParams& params, std::span<const double> t_grid,
                              const InversionConfig& cfg) {
    params.require_downward();
    check_grid(t_grid, "check_constant");
    if (params.nu == 0.0) {
        throw ParameterError("check_constant: requires nu != 0");
    }
    const double m = std::abs(params.nu);
    const double scale = params.nu > 0.0 ? params.b : params.a;
    ConstantReport report;
    report.params = params;
    report.target = std::pow(scale, 2.0 * m) * (1.0 - std::pow(params.b / params.a, 2.0 * m));
    const double g = gamma(1.0 + m);
    for (double t : t_grid) {
        const TailEstimate e = tail_inversion(params, t, cfg);
        report.rows.push_back({t, e.value, e.err, std::pow(2.0 * t, m) * g * e.value});
    }
    report.rel_deviation = std::abs(report.rows.back().normalized / report.target - 1.0);
    report.pass = report.rel_deviation <= kConstantTolerance;
    return report;
}

SandwichReport check_moment_sandwich(double nu, double a, double p,
                                     std::span<const double> t_grid) {
    check_grid(t_grid, "check_moment_sandwich");
    SandwichReport report{nu, a, p, {}, true};
    const BesselParams params{nu, a, a};
    for (double t : t_grid) {
        if (!(t >= 1.0)) {
            throw ParameterError("check_moment_sandwich: grid must lie in [1, inf)");
        }
        const MomentBounds bounds = neg_moment_bounds(params, p, t);
        const double value = neg_moment(params, p, t).value;
        const bool ok = bounds.lower <= value && value <= bounds.upper;
        report.rows.push_back({t, bounds.lower, value, bounds.upper, ok});
        report.pass = report.pass && ok;
    }
    return report;
}

RemainderReport check_remainder_slope(const BesselParams& params, std::span<const double> t_grid,
                                      const InversionConfig& cfg) {
    params.require_downward();
    check_grid(t_grid, "check_remainder_slope");
    RemainderReport report;
    report.params = params;
    std::vector<Point> points;
    for (double t : t_grid) {
        const double tail = tail_inversion(params, t, cfg).value;
        const double asym = asymptotic_tail(params, t).value;
        const double diff = std::abs(tail - asym);
        report.rows.push_back({t, tail, asym, diff});
        points.emplace_back(t, diff);
    }
    report.fit = fit_decay_slope(points);
    report.threshold = -std::abs(params.nu) - kSlopeMargin;
    report.pass = report.fit.slope <= report.threshold;
    return report;
}

DualityReport check_duality(const BesselParams& params, std::span<const double> t_grid,
                            const InversionConfig& cfg, double tolerance) {
    check_grid(t_grid, "check_duality");
    DualityReport report;
    report.params = params;
    report.factor = duality_density_factor(params);
    const BesselParams mirrored{-params.nu, params.a, params.b};
    for (double t : t_grid) {
        const double neg = tail_inversion(mirrored, t, cfg).value;
        const double pos = tail_inversion(params, t, cfg).value;
        const double rel = std::abs(neg / (report.factor * pos) - 1.0);
        report.rows.push_back({t, neg, pos, rel});
        report.max_rel_error = std::max(report.max_rel_error, rel);
    }
    report.pass = report.max_rel_error <= tolerance;
    return report;
}

BoundednessReport check_tail_boundedness(const BesselParams& params,
                                         std::span<const double> t_grid,
                                         const InversionConfig& cfg) {
    params.require_downward();
    check_grid(t_grid, "check_tail_boundedness");
    BoundednessReport report;
    report.params = params;
    const double m = std::abs(params.nu);
    double lo = INFINITY;
    double hi = 0.0;
    for (double t : t_grid) {
        const double v = std::pow(t, m) * tail_inversion(params, t, cfg).value;
        report.scaled.emplace_back(t, v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    report.max_over_min = hi / lo;
    report.max_over_last = hi / report.scaled.back().second;
    report.pass = report.max_over_min < kBoundednessFactor;
    return report;
}

MonotonicityReport check_complete_monotonicity(const BesselParams& params, double lambda0,
                                               double spacing, int points, int order) {
    params.require_downward();
    if (!(lambda0 > 0.0) || !(spacing > 0.0) || order < 1 || points < order + 1) {
        throw ParameterError(
            "check_complete_monotonicity: needs lambda0 > 0, spacing > 0, points > order >= 1");
    }
    MonotonicityReport report;
    report.params = params;
    std::vector<Extended> values;
    for (int j = 0; j < points; ++j) {
        const double lambda = lambda0 + spacing * j;
        report.lambdas.push_back(lambda);
        values.push_back(laplace_transform(params, Extended(lambda)));
    }
    report.pass = true;
    Extended sign = -1;
    for (int k = 1; k <= order; ++k) {
        for (std::size_t j = 0; j + 1 < values.size(); ++j) {
            values[j] = values[j + 1] - values[j];
        }
        values.pop_back();
        std::vector<double> row;
        for (const Extended& v : values) {
            const Extended signed_value = sign * v;
            row.push_back(static_cast<double>(signed_value));
            report.pass = report.pass && signed_value > 0;
        }
        report.differences.push_back(std::move(row));
        sign = -sign;
    }
    return report;
}

}  // namespace besselhit
