#include "besselhit/hitting_law.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace besselhit {

namespace {

constexpr double kDensityAbsTolerance = 1e-5;

void check_time(double t, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError(std::string(who) + ": requires t > 0");
    }
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("laplace_transform: requires lambda > 0");
    }
}

std::string index_warning(double nu) {
    if (nu != 0.0 && std::abs(nu) < kNearZeroIndex) {
        return "index |nu| < 1e-8 but nonzero: the power-law asymptote is used, the "
               "logarithmic law applies only at nu = 0";
    }
    return {};
}

template <class Real>
Real phi(const BesselParams& params, const Real& lambda) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    const Real nu(params.nu);
    const Real a(params.a);
    const Real b(params.b);
    const Real s = sqrt(2 * lambda);
    const Real ka = bessel_k_scaled_generic<Real>(nu, a * s);
    const Real kb = bessel_k_scaled_generic<Real>(nu, b * s);
    return pow(b / a, nu) * exp(-(a - b) * s) * (ka / kb);
}

template <class Real>
Real hit_ever(const BesselParams& params) {
    using std::pow;
    if (params.nu > 0.0) {
        return pow(Real(params.b) / Real(params.a), 2 * Real(params.nu));
    }
    return Real(1);
}

// Ladder rungs for the inverse of g(lambda), evaluated in the configured
// precision.
template <class Fn>
std::array<double, 2> rungs(Fn&& g, double t, const InversionConfig& cfg) {
    if (cfg.precision == Precision::Extended) {
        const ExtendedTransform tr = [&](const Extended& lambda) { return g(lambda); };
        const auto r = invert_ladder(tr, t, cfg);
        return {static_cast<double>(r[0]), static_cast<double>(r[1])};
    }
    const Transform tr = [&](double lambda) { return g(lambda); };
    return invert_ladder(tr, t, cfg);
}

InversionResult accept_relative(const std::array<double, 2>& r, const char* who) {
    const double value = r[1];
    const double err = std::abs(r[1] - r[0]);
    if (!std::isfinite(value) || err > 1e-4 * std::abs(value)) {
        throw InstabilityError(std::string(who) +
                               ": Gaver-Stehfest ladder disagrees beyond 1e-4 relative (value " +
                               brief(value) + ", spread " + brief(err) +
                               "); t is too extreme for the configured precision");
    }
    return {value, err};
}

}  // namespace

std::string_view to_string(TailMethod method) {
    switch (method) {
        case TailMethod::Inversion:
            return "inversion";
        case TailMethod::MonteCarloIndicator:
            return "mc-indicator";
        case TailMethod::MonteCarloLemma22:
            return "mc-lemma22";
        case TailMethod::Asymptotic:
            return "asymptotic";
        case TailMethod::ClosedForm:
            return "closed-form";
    }
    return "unknown";
}

InversionConfig default_hitting_inversion() { return InversionConfig::extended(24, 28); }

double prob_hit_ever(const BesselParams& params) {
    params.require_downward();
    return hit_ever<double>(params);
}

double laplace_transform(const BesselParams& params, double lambda) {
    params.require_downward();
    check_lambda(lambda);
    return phi<double>(params, lambda);
}

Extended laplace_transform(const BesselParams& params, const Extended& lambda) {
    params.require_downward();
    check_lambda(static_cast<double>(lambda));
    return phi<Extended>(params, lambda);
}

TailEstimate tail_inversion(const BesselParams& params, double t, const InversionConfig& cfg) {
    params.require_downward();
    check_time(t, "tail_inversion");
    auto tail_transform = [&](const auto& lambda) {
        using Real = std::decay_t<decltype(lambda)>;
        return (hit_ever<Real>(params) - phi<Real>(params, lambda)) / lambda;
    };
    const InversionResult r = accept_relative(rungs(tail_transform, t, cfg), "tail_inversion");
    TailEstimate out;
    out.t = t;
    out.value = std::clamp(r.value, 0.0, hit_ever<double>(params));
    out.method = TailMethod::Inversion;
    out.err = r.err;
    out.warning = index_warning(params.nu);
    return out;
}

InversionResult cdf_inversion(const BesselParams& params, double t, const InversionConfig& cfg) {
    params.require_downward();
    check_time(t, "cdf_inversion");
    auto cdf_transform = [&](const auto& lambda) { return phi(params, lambda) / lambda; };
    return accept_relative(rungs(cdf_transform, t, cfg), "cdf_inversion");
}

InversionResult density(const BesselParams& params, double t, const InversionConfig& cfg) {
    params.require_downward();
    check_time(t, "density");
    auto density_transform = [&](const auto& lambda) { return phi(params, lambda); };
    const auto r = rungs(density_transform, t, cfg);
    // Near t = 0 the density falls off like exp(-(a-b)^2/2t). Stehfest resolves
    // that only to ~1e-6 absolute, so small values are judged against the hit mass.
    const double err = std::abs(r[1] - r[0]);
    const double allowed =
        std::max(1e-4 * std::abs(r[1]), kDensityAbsTolerance * hit_ever<double>(params));
    if (!std::isfinite(r[1]) || err > allowed) {
        throw InstabilityError("density: Gaver-Stehfest ladder disagrees (value " + brief(r[1]) +
                               ", spread " + brief(err) + ")");
    }
    return {std::max(r[1], 0.0), err};
}

TailEstimate closed_form_tail(const BesselParams& params, double t) {
    params.require_downward();
    check_time(t, "closed_form_tail");
    if (params.nu != 0.5) {
        throw DomainError("closed_form_tail: only available for nu = 1/2");
    }
    TailEstimate out;
    out.t = t;
    out.value = params.b / params.a * erf((params.a - params.b) / std::sqrt(2.0 * t));
    out.method = TailMethod::ClosedForm;
    out.err = 0.0;
    return out;
}

TailEstimate asymptotic_tail(const BesselParams& params, double t) {
    params.require_downward();
    check_time(t, "asymptotic_tail");
    const double nu = params.nu;
    const double a = params.a;
    const double b = params.b;
    TailEstimate out;
    out.t = t;
    out.method = TailMethod::Asymptotic;
    out.warning = index_warning(nu);
    if (nu == 0.0) {
        if (!(t > 1.0)) {
            throw DomainError("asymptotic_tail: nu = 0 law needs t > 1");
        }
        out.value = 2.0 * std::log(a / b) / std::log(t);
        out.err = 0.0;
        out.err_quantified = false;
        return out;
    }
    const double m = std::abs(nu);
    const double escape = 1.0 - std::pow(b / a, 2.0 * m);
    const double scale = nu > 0.0 ? std::pow(b, 2.0 * m) : std::pow(a, 2.0 * m);
    out.value = scale * escape / (gamma(1.0 + m) * std::pow(2.0 * t, m));
    const double eps0 = m / (2.0 * (1.0 + m));
    out.err = std::pow(t, -m - eps0);
    return out;
}

double duality_density_factor(const BesselParams& params) {
    params.require_downward();
    if (!(params.nu > 0.0)) {
        throw DomainError("duality_density_factor: requires nu > 0");
    }
    return std::pow(params.a / params.b, 2.0 * params.nu);
}

double survival_probability(const BesselParams& params, double tail) {
    return tail + 1.0 - prob_hit_ever(params);
}

}  // namespace besselhit
