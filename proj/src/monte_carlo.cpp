#include "besselhit/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <span>
#include <thread>
#include <vector>

#include "besselhit/hitting_law.hpp"

namespace besselhit {

namespace {

// After t, steps grow to this multiple of the squared distance to the
// barrier; a one-step excursion of that size has probability ~exp(-10).
constexpr double kAdaptiveStepFactor = 0.05;
// Bridge crossing probabilities below exp(kBridgeCutoff) ~ 1e-14 are not
// sampled.
constexpr double kBridgeCutoff = -32.0;

// Squared Bessel transition sampler with distribution objects reused along a
// path.
class StepSampler {
public:
    explicit StepSampler(double delta)
        : delta_(delta), chi_(delta > 1.0 ? delta - 1.0 : 1.0) {}

    double operator()(double x, double h, Engine& rng) {
        const double noncentrality = x / h;
        if (delta_ > 1.0) {
            const double shifted = normal_(rng) + std::sqrt(noncentrality);
            return h * (chi_(rng) + shifted * shifted);
        }
        std::poisson_distribution<long long> mix(0.5 * noncentrality);
        const long long n = noncentrality > 0.0 ? mix(rng) : 0;
        std::chi_squared_distribution<double> chi(delta_ + 2.0 * static_cast<double>(n));
        return h * chi(rng);
    }

private:
    double delta_;
    std::chi_squared_distribution<double> chi_;
    std::normal_distribution<double> normal_;
};

// True if the path is absorbed at b during a step from r0 to r1.
bool crosses(double r0, double r1, double b, double h, bool bridge, Engine& rng,
             std::uniform_real_distribution<double>& unif) {
    if (r1 <= b) {
        return true;
    }
    if (!bridge) {
        return false;
    }
    const double exponent = -2.0 * (r0 - b) * (r1 - b) / h;
    return exponent > kBridgeCutoff && unif(rng) < std::exp(exponent);
}

struct PathState {
    bool alive = true;
    double x = 0.0;  // squared radius
};

// Fixed grid on [0, t]; the last step is shortened to land on t.
PathState run_to(double t, const BesselParams& params, const McConfig& cfg, StepSampler& step,
                 Engine& rng, std::uniform_real_distribution<double>& unif) {
    PathState s{true, params.a * params.a};
    const double h = cfg.step;
    const auto n = static_cast<std::int64_t>(std::ceil(t / h - 1e-9));
    for (std::int64_t i = 0; i < n; ++i) {
        const double dt = (i + 1 < n) ? h : t - static_cast<double>(n - 1) * h;
        const double y = step(s.x, dt, rng);
        if (crosses(std::sqrt(s.x), std::sqrt(y), params.b, dt, cfg.bridge_correction, rng,
                    unif)) {
            s.alive = false;
            return s;
        }
        s.x = y;
    }
    return s;
}

// True if the path started at squared radius x at time t hits b before the
// horizon. Steps grow with the distance to the barrier.
bool hits_before(double x, double t, double horizon, const BesselParams& params,
                 const McConfig& cfg, StepSampler& step, Engine& rng,
                 std::uniform_real_distribution<double>& unif) {
    double s = t;
    while (s < horizon) {
        const double r = std::sqrt(x);
        const double gap = r - params.b;
        const double dt =
            std::min(std::max(cfg.step, kAdaptiveStepFactor * gap * gap), horizon - s);
        const double y = step(x, dt, rng);
        if (crosses(r, std::sqrt(y), params.b, dt, cfg.bridge_correction, rng, unif)) {
            return true;
        }
        x = y;
        s += dt;
    }
    return false;
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double acc = 0.0;
        for (double x : v) {
            acc += x;
        }
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// Evaluates payoff(index, engine) for every path and aggregates in path order.
template <class Payoff>
McEstimate run_paths(const McConfig& cfg, McEstimator estimator, Payoff&& payoff) {
    const auto paths = static_cast<std::size_t>(cfg.paths);
    std::vector<double> values(paths);
    const std::size_t blocks = static_cast<std::size_t>(cfg.streams);
    std::atomic<std::size_t> next_block{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t blk = next_block.fetch_add(1);
            if (blk >= blocks) {
                return;
            }
            const std::size_t begin = blk * paths / blocks;
            const std::size_t end = (blk + 1) * paths / blocks;
            for (std::size_t i = begin; i < end; ++i) {
                Engine rng = path_engine(cfg.seed, i);
                values[i] = payoff(rng);
            }
        }
    };
    unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
    }

    McEstimate out;
    out.paths = cfg.paths;
    out.estimator = estimator;
    const double n = static_cast<double>(paths);
    out.mean = pairwise_sum(values) / n;
    for (double& v : values) {
        v = (v - out.mean) * (v - out.mean);
    }
    out.variance = pairwise_sum(values) / n;
    out.std_error = std::sqrt(out.variance / n);
    return out;
}

void check_law_params(const BesselParams& params, double t) {
    params.require_downward();
    if (!(params.nu > -1.0)) {
        throw ParameterError("Monte Carlo needs nu > -1 (dimension delta > 0)");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("Monte Carlo: requires t > 0");
    }
}

}  // namespace

std::string_view to_string(McEstimator estimator) {
    return estimator == McEstimator::Indicator ? "indicator" : "lemma22";
}

void McConfig::validate() const {
    if (paths < 1) {
        throw ParameterError("McConfig: paths must be >= 1");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ParameterError("McConfig: step must be > 0");
    }
    if (horizon && !(*horizon >= step)) {
        throw ParameterError("McConfig: horizon must be >= step");
    }
    if (streams < 1) {
        throw ParameterError("McConfig: streams must be >= 1");
    }
    if (threads < 0) {
        throw ParameterError("McConfig: threads must be >= 0");
    }
}

Engine path_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Engine(seq);
}

double sample_squared_bessel_step(double x, double h, double delta, Engine& rng) {
    if (!(delta > 0.0)) {
        throw ParameterError("squared Bessel step: dimension delta must be > 0");
    }
    if (!(x >= 0.0)) {
        throw DomainError("squared Bessel step: x must be >= 0");
    }
    if (!(h > 0.0)) {
        throw DomainError("squared Bessel step: h must be > 0");
    }
    StepSampler sampler(delta);
    return sampler(x, h, rng);
}

McEstimate tail_mc_indicator(const BesselParams& params, double t, const McConfig& cfg) {
    check_law_params(params, t);
    cfg.validate();
    if (cfg.step > t / 100.0) {
        throw ParameterError("tail_mc_indicator: grid step must be <= t/100");
    }
    const double delta = params.dimension();
    if (params.nu <= 0.0) {
        return run_paths(cfg, McEstimator::Indicator, [&](Engine& rng) {
            StepSampler step(delta);
            std::uniform_real_distribution<double> unif;
            return run_to(t, params, cfg, step, rng, unif).alive ? 1.0 : 0.0;
        });
    }
    const double horizon = cfg.horizon.value_or(kDefaultHorizonFactor * t);
    if (horizon < t) {
        throw ParameterError("tail_mc_indicator: horizon must be >= t");
    }
    McEstimate out = run_paths(cfg, McEstimator::Indicator, [&](Engine& rng) {
        StepSampler step(delta);
        std::uniform_real_distribution<double> unif;
        const PathState s = run_to(t, params, cfg, step, rng, unif);
        if (!s.alive) {
            return 0.0;
        }
        return hits_before(s.x, t, horizon, params, cfg, step, rng, unif) ? 1.0 : 0.0;
    });
    out.horizon_truncation = asymptotic_tail(params, horizon).value;
    return out;
}

McEstimate tail_mc_lemma22(const BesselParams& params, double t, const McConfig& cfg) {
    check_law_params(params, t);
    cfg.validate();
    if (!(params.nu > 0.0)) {
        throw DomainError("tail_mc_lemma22: requires nu > 0");
    }
    const double delta = params.dimension();
    return run_paths(cfg, McEstimator::Lemma22, [&](Engine& rng) {
        StepSampler step(delta);
        std::uniform_real_distribution<double> unif;
        const PathState s = run_to(t, params, cfg, step, rng, unif);
        if (!s.alive) {
            return 0.0;
        }
        return std::pow(params.b * params.b / s.x, params.nu);
    });
}

}  // namespace besselhit
