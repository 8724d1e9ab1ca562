#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "besselhit/errors.hpp"

namespace besselhit {

// Value of a positive-term series together with the number of summed terms
// and a bound on the dropped remainder.
struct SeriesEval {
    double value = 0.0;
    int terms_used = 0;
    double trunc_bound = 0.0;
};

inline constexpr double kBesselICrossover = 30.0;

// Lanczos approximation (g = 7, 9 terms). Requires x > 0.
double gamma(double x);
double log_gamma(double x);

double erf(double x);

// I_nu(z) for nu >= 0, z > 0. Power series up to `crossover`, Hankel
// expansion beyond.
SeriesEval bessel_i(double nu, double z, double crossover = kBesselICrossover);
// exp(-z) I_nu(z); same regimes as bessel_i, never overflows.
SeriesEval bessel_i_scaled(double nu, double z, double crossover = kBesselICrossover);

// K_nu(z) for real nu and z > 0.
double bessel_k(double nu, double z);
// exp(z) K_nu(z).
double bessel_k_scaled(double nu, double z);

namespace detail {

// Hankel expansion of exp(z) K_nu(z). Returns false if the divergent tail is
// reached before the terms drop below epsilon.
template <class Real>
bool bessel_k_scaled_hankel(const Real& nu, const Real& z, Real& out) {
    using std::abs;
    using std::sqrt;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real pi = boost::math::constants::pi<Real>();
    const Real mu = 4 * nu * nu;
    Real term = 1;
    Real sum = 1;
    Real prev_abs = 1;
    for (int k = 1; k < 1000; ++k) {
        const Real odd = 2 * k - 1;
        term *= (mu - odd * odd) / (8 * k * z);
        const Real mag = abs(term);
        if (mag <= eps * abs(sum)) {
            sum += term;
            out = sqrt(pi / (2 * z)) * sum;
            return true;
        }
        if (mag > prev_abs && k > nu) {
            return false;
        }
        prev_abs = mag;
        sum += term;
    }
    return false;
}

// exp(z) K_nu(z) = int_0^inf exp(-2 z sinh^2(u/2)) cosh(nu u) du, summed with
// the trapezoidal rule. The integrand is analytic in a strip and decays
// double-exponentially, so halving h until two levels agree converges
// geometrically for every real nu, integer or not.
template <class Real>
Real bessel_k_scaled_integral(const Real& nu, const Real& z) {
    using std::abs;
    using std::exp;
    const Real eps = std::numeric_limits<Real>::epsilon();

    auto f = [&](const Real& u) {
        const Real e = exp(u / 2);
        const Real s = (e - 1 / e) / 2;
        const Real en = exp(nu * u);
        return exp(-2 * z * s * s) * (en + 1 / en) / 2;
    };

    Real h = Real(1) / 2;
    Real sum = f(Real(0)) / 2;
    Real prev = sum;
    int n = 0;
    for (int k = 1;; ++k) {
        const Real v = f(k * h);
        sum += v;
        // Past the peak the integrand is decreasing and falls off faster
        // than any exponential.
        if (v < prev && v <= eps * sum * Real(1e-3)) {
            n = k;
            break;
        }
        prev = v;
        if (k > 20000) {
            throw InstabilityError("bessel_k: integrand does not decay");
        }
    }
    Real trap = h * sum;
    for (int level = 0; level < 16; ++level) {
        Real odd_sum = 0;
        for (int k = 1; k < 2 * n; k += 2) {
            odd_sum += f(k * (h / 2));
        }
        h /= 2;
        n *= 2;
        const Real next = trap / 2 + h * odd_sum;
        const bool converged = abs(next - trap) <= 64 * eps * next;
        trap = next;
        if (converged) {
            return trap;
        }
    }
    throw InstabilityError("bessel_k: trapezoidal refinement did not converge");
}

}  // namespace detail

// exp(z) K_nu(z) in the arithmetic of Real. Hankel expansion once the
// smallest asymptotic term is below epsilon, trapezoidal integral otherwise.
template <class Real>
Real bessel_k_scaled_generic(Real nu, const Real& z) {
    using std::abs;
    using std::log;
    if (!(z > 0)) {
        throw DomainError("bessel_k: argument z must be > 0");
    }
    nu = abs(nu);
    const Real crossover = -log(std::numeric_limits<Real>::epsilon()) / 2 + 5;
    if (z >= crossover) {
        Real out;
        if (detail::bessel_k_scaled_hankel(nu, z, out)) {
            return out;
        }
    }
    return detail::bessel_k_scaled_integral(nu, z);
}

}  // namespace besselhit
