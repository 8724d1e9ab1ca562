#pragma once

#include "besselhit/special_functions.hpp"

namespace besselhit {

// Index, start point and barrier of a Bessel process hitting problem.
struct BesselParams {
    double nu = 0.0;
    double a = 1.0;
    double b = 0.5;

    // Dimension delta = 2 (nu + 1).
    double dimension() const { return 2.0 * (nu + 1.0); }

    // a > 0, b > 0, all finite.
    void validate() const;
    // validate() plus the downward restriction b < a.
    void require_downward() const;
};

// Density of R_t at y for the process started at a, nu >= 0:
//   (1/t) (y/a)^nu y exp(-(a^2 + y^2)/2t) I_nu(a y / t).
double transition_density(const BesselParams& params, double t, double y);

// E_a[R_t^(-2p)] for 0 < p < 1 + nu, from the series
//   (2t)^-p e^(-a^2/2t) sum_n a^(2n) Gamma(n+nu+1-p) / (n! Gamma(1+n+nu) (2t)^n).
// trunc_bound bounds the dropped tail by a geometric majorant.
SeriesEval neg_moment(const BesselParams& params, double p, double t);

// Two-sided bound on neg_moment valid for t >= 1:
//   lower    = G (2t)^-p e^(-a^2/2t)
//   upper    = G (2t)^-p + constant t^(-1-p)
// with G = Gamma(1+nu-p)/Gamma(1+nu) and constant = 2^-p times the n >= 1
// part of the series at t = 1, which dominates the n >= 1 part at any t >= 1.
struct MomentBounds {
    double lower = 0.0;
    double upper = 0.0;
    double leading = 0.0;   // G (2t)^-p
    double constant = 0.0;
};

MomentBounds neg_moment_bounds(const BesselParams& params, double p, double t);

}  // namespace besselhit
