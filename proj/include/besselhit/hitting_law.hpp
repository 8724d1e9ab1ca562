#pragma once

#include <string>
#include <string_view>

#include "besselhit/bessel_process.hpp"
#include "besselhit/laplace_inversion.hpp"
#include "besselhit/precision.hpp"

namespace besselhit {

// Law of the first hitting time tau_b of a Bessel process started at a > b.
//
// For nu > 0 the process escapes to infinity with probability 1 - (b/a)^(2nu),
// so the decaying tail is P(t < tau_b < infinity). For nu <= 0 the barrier is
// hit almost surely and the tail is P(tau_b > t). Every "tail" below follows
// that convention.

enum class TailMethod { Inversion, MonteCarloIndicator, MonteCarloLemma22, Asymptotic, ClosedForm };

std::string_view to_string(TailMethod method);

struct TailEstimate {
    double t = 0.0;
    double value = 0.0;
    TailMethod method = TailMethod::Inversion;
    // Inversion: ladder spread. Monte Carlo: standard error. Asymptotic:
    // heuristic next-order size. Closed form: 0.
    double err = 0.0;
    // False when the method has no rate for its error (nu = 0 asymptote).
    bool err_quantified = true;
    std::string warning;
};

// Stehfest ladder used by the law-level inversions unless overridden.
InversionConfig default_hitting_inversion();

// P(tau_b < infinity): (b/a)^(2nu) for nu > 0, 1 otherwise.
double prob_hit_ever(const BesselParams& params);

// E[exp(-lambda tau_b)] = (b/a)^nu K_nu(a sqrt(2 lambda)) / K_nu(b sqrt(2 lambda)).
double laplace_transform(const BesselParams& params, double lambda);
Extended laplace_transform(const BesselParams& params, const Extended& lambda);

// P(t < tau_b < infinity) for nu > 0, P(tau_b > t) for nu <= 0, by inverting
// (P(tau_b < infinity) - phi(lambda)) / lambda. InstabilityError when the
// ladder rungs differ by more than 1e-4 relative.
TailEstimate tail_inversion(const BesselParams& params, double t,
                            const InversionConfig& cfg = default_hitting_inversion());

// P(tau_b <= t) by inverting phi(lambda) / lambda.
InversionResult cdf_inversion(const BesselParams& params, double t,
                              const InversionConfig& cfg = default_hitting_inversion());

// Density of tau_b at t (a sub-probability density for nu > 0).
// InstabilityError when the ladder spread exceeds
// max(1e-4 |value|, 1e-5 P(tau_b < infinity)).
InversionResult density(const BesselParams& params, double t,
                        const InversionConfig& cfg = default_hitting_inversion());

// nu = 1/2 only: the transform reduces to (b/a) exp(-(a-b) sqrt(2 lambda)),
// giving the tail (b/a) erf((a-b)/sqrt(2t)).
TailEstimate closed_form_tail(const BesselParams& params, double t);

// Large-t law:
//   nu > 0:  b^(2nu) (1 - (b/a)^(2nu)) / (Gamma(1+nu) (2t)^nu)
//   nu < 0:  a^(2|nu|) (1 - (b/a)^(2|nu|)) / (Gamma(1+|nu|) (2t)^|nu|)
//   nu = 0:  2 log(a/b) / log t            (t > 1)
// err is t^(-|nu|-eps0) with eps0 = |nu| / (2 (1 + |nu|)); for nu = 0 it is
// left unquantified.
TailEstimate asymptotic_tail(const BesselParams& params, double t);

// (a/b)^(2nu) for nu > 0: density of tau_b under index -nu over that under nu.
double duality_density_factor(const BesselParams& params);

// P(tau_b > t) from a tail in the convention above.
double survival_probability(const BesselParams& params, double tail);

// Index magnitudes below this trigger a warning: the asymptote switches to the
// logarithmic law only at nu == 0 exactly.
inline constexpr double kNearZeroIndex = 1e-8;

}  // namespace besselhit
