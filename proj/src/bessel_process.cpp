#include "besselhit/bessel_process.hpp"

#include <cmath>
#include <string>

namespace besselhit {

namespace {

constexpr double kStop = 1e-17;
constexpr double kRescaleAt = 1e250;

// sum_n u_n with u_0 = 1, u_{n+1}/u_n = x (n+nu+1-p) / ((n+1)(n+1+nu)).
// The true sum is exp(log_scale) * sum.
struct MomentSeries {
    double sum = 0.0;
    double sum_from_one = 0.0;
    double bound = 0.0;
    double log_scale = 0.0;
    int terms = 0;
};

MomentSeries moment_series(double nu, double p, double x) {
    MomentSeries s;
    double term = 1.0;
    s.sum = 1.0;
    s.terms = 1;
    for (int n = 0;; ++n) {
        const double next = term * x * (n + nu + 1.0 - p) / ((n + 1.0) * (n + 1.0 + nu));
        // u_{k+1}/u_k <= x/(k+1) for every k, since p > 0.
        const double majorant = x / (n + 2.0);
        if ((next < kStop * s.sum && majorant < 1.0) || next == 0.0) {
            s.bound = next / (1.0 - majorant);
            break;
        }
        s.sum += next;
        s.sum_from_one += next;
        term = next;
        ++s.terms;
        if (s.sum > kRescaleAt) {
            s.sum /= kRescaleAt;
            s.sum_from_one /= kRescaleAt;
            term /= kRescaleAt;
            s.log_scale += std::log(kRescaleAt);
        }
    }
    return s;
}

// Gamma(1+nu-p) / Gamma(1+nu)
double gamma_ratio(double nu, double p) {
    return std::exp(log_gamma(1.0 + nu - p) - log_gamma(1.0 + nu));
}

void check_moment_args(const BesselParams& params, double p, double t) {
    params.validate();
    if (!(params.nu > -1.0)) {
        throw ParameterError("neg_moment: requires nu > -1");
    }
    if (!(p > 0.0)) {
        throw ParameterError("neg_moment: requires p > 0");
    }
    if (!(p < 1.0 + params.nu)) {
        throw ParameterError("neg_moment: requires p < 1 + nu (Gamma(1+nu-p) pole)");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("neg_moment: requires t > 0");
    }
}

}  // namespace

void BesselParams::validate() const {
    if (!std::isfinite(nu)) {
        throw ParameterError("nu must be finite");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("start point a must be > 0");
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw DomainError("barrier b must be > 0");
    }
}

void BesselParams::require_downward() const {
    validate();
    if (!(b < a)) {
        throw DomainError(
            "downward case only: requires 0 < b < a (for a < b the tail decays "
            "exponentially and is not covered)");
    }
}

double transition_density(const BesselParams& params, double t, double y) {
    params.validate();
    if (!(params.nu >= 0.0)) {
        throw DomainError("transition_density: requires nu >= 0");
    }
    if (!(t > 0.0)) {
        throw DomainError("transition_density: requires t > 0");
    }
    if (!(y > 0.0)) {
        throw DomainError("transition_density: requires y > 0");
    }
    const double a = params.a;
    const double z = a * y / t;
    // exp(-(a^2+y^2)/2t) I_nu(z) = exp(-(a-y)^2/2t) exp(-z) I_nu(z)
    const double scaled_i = bessel_i_scaled(params.nu, z).value;
    return std::pow(y / a, params.nu) * (y / t) * std::exp(-(a - y) * (a - y) / (2.0 * t)) *
           scaled_i;
}

SeriesEval neg_moment(const BesselParams& params, double p, double t) {
    check_moment_args(params, p, t);
    const double nu = params.nu;
    const double x = params.a * params.a / (2.0 * t);
    const MomentSeries s = moment_series(nu, p, x);
    const double log_prefactor = log_gamma(1.0 + nu - p) - log_gamma(1.0 + nu) -
                                 p * std::log(2.0 * t) - x + s.log_scale;
    const double scale = std::exp(log_prefactor);
    return {scale * s.sum, s.terms, scale * s.bound};
}

MomentBounds neg_moment_bounds(const BesselParams& params, double p, double t) {
    check_moment_args(params, p, t);
    const double nu = params.nu;
    const double g = gamma_ratio(nu, p);
    MomentBounds out;
    out.leading = g * std::pow(2.0 * t, -p);
    out.lower = out.leading * std::exp(-params.a * params.a / (2.0 * t));
    const MomentSeries at_one = moment_series(nu, p, params.a * params.a / 2.0);
    out.constant = std::pow(2.0, -p) * g * std::exp(at_one.log_scale) *
                   (at_one.sum_from_one + at_one.bound);
    out.upper = out.leading + out.constant * std::pow(t, -1.0 - p);
    return out;
}

}  // namespace besselhit
