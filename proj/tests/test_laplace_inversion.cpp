#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "besselhit/laplace_inversion.hpp"

namespace bh = besselhit;
using bh::Extended;
using bh::ExtendedTransform;
using bh::InversionConfig;
using bh::Transform;

namespace {

InversionConfig double_ladder(int low, int high) {
    InversionConfig cfg;
    cfg.order = std::max(low, high);
    cfg.ladder = {low, high};
    return cfg;
}

// Size of the rounding error of an order-14 inversion: the weights alternate,
// so every sample's rounding is amplified by |V_k|.
double rounding_scale(const Transform& phi, double t) {
    const auto& w = bh::stehfest_weights_double(14);
    const double step = std::log(2.0) / t;
    double acc = 0.0;
    for (int k = 1; k <= 14; ++k) {
        acc += std::abs(w[static_cast<std::size_t>(k - 1)] * phi(k * step));
    }
    return 16.0 * std::numeric_limits<double>::epsilon() * acc * step;
}

const Transform kRecip = [](double l) { return 1.0 / l; };
const Transform kExp = [](double l) { return 1.0 / (l + 1.0); };

}  // namespace

TEST(StehfestWeights, OrderFour) {
    const auto w = bh::stehfest_weights(4);
    ASSERT_EQ(w.size(), 4u);
    EXPECT_DOUBLE_EQ(w[0], -2.0);
    EXPECT_DOUBLE_EQ(w[1], 26.0);
    EXPECT_DOUBLE_EQ(w[2], -48.0);
    EXPECT_DOUBLE_EQ(w[3], 24.0);
}

TEST(StehfestWeights, CachedTablesMatch) {
    for (int n = 4; n <= 20; n += 2) {
        EXPECT_EQ(bh::stehfest_weights(n), bh::stehfest_weights_double(n));
        const auto& q = bh::stehfest_weights_extended(n);
        ASSERT_EQ(q.size(), static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            EXPECT_DOUBLE_EQ(static_cast<double>(q[static_cast<std::size_t>(k)]),
                             bh::stehfest_weights_double(n)[static_cast<std::size_t>(k)]);
        }
    }
}

TEST(StehfestWeights, ReproduceUnitStep) {
    // sum_k V_k / k = 1 / ln 2 * ln 2 = 1 is exactness on 1/lambda.
    for (int n = 4; n <= bh::kMaxStehfestOrderExtended; n += 2) {
        const auto& w = bh::stehfest_weights_extended(n);
        Extended acc = 0;
        for (int k = 1; k <= n; ++k) {
            acc += w[static_cast<std::size_t>(k - 1)] / k;
        }
        Extended mass = 0;
        for (const Extended& v : w) {
            mass += abs(v);
        }
        EXPECT_LT(abs(acc - 1), 16 * std::numeric_limits<Extended>::epsilon() * mass) << n;
    }
}

TEST(StehfestWeights, RangeChecks) {
    EXPECT_THROW(bh::stehfest_weights(2), bh::ParameterError);
    EXPECT_THROW(bh::stehfest_weights(15), bh::ParameterError);
    EXPECT_THROW(bh::stehfest_weights(34), bh::ParameterError);
    EXPECT_EQ(bh::max_stehfest_order(bh::Precision::Double), 20);
    EXPECT_EQ(bh::max_stehfest_order(bh::Precision::Extended), 32);
}

TEST(InversionConfig, Validation) {
    EXPECT_NO_THROW(InversionConfig{}.validate());
    EXPECT_NO_THROW(InversionConfig::extended().validate());
    EXPECT_THROW(double_ladder(12, 12).validate(), bh::ParameterError);
    EXPECT_THROW(double_ladder(11, 14).validate(), bh::ParameterError);
    EXPECT_THROW(double_ladder(20, 22).validate(), bh::ParameterError);
    InversionConfig mismatch;
    mismatch.order = 12;
    EXPECT_THROW(mismatch.validate(), bh::ParameterError);
    EXPECT_THROW(InversionConfig::extended(30, 34).validate(), bh::ParameterError);
}

TEST(Invert, ConstantFunction) {
    // Exact in exact arithmetic. In double the alternating weights cost about
    // eps * sum|V_k|, so 1e-10 holds only up to order 8.
    for (double t : {0.01, 1.0, 3.0, 100.0, 1e4}) {
        for (int n = 4; n <= 8; n += 2) {
            EXPECT_NEAR(bh::invert_ladder(kRecip, t, double_ladder(n + 2, n))[1], 1.0, 1e-10)
                << t << " " << n;
        }
        EXPECT_NEAR(bh::invert(kRecip, t).value, 1.0, 1e-8) << t;
    }
}

TEST(Invert, ConstantFunctionExtended) {
    const ExtendedTransform recip = [](const Extended& l) { return 1 / l; };
    for (double t : {0.01, 1.0, 100.0}) {
        for (int n = 4; n <= 30; n += 2) {
            const auto r = bh::invert_ladder(recip, t, InversionConfig::extended(n, n + 2));
            EXPECT_NEAR(static_cast<double>(r[0]), 1.0, 1e-10) << t << " " << n;
            EXPECT_NEAR(static_cast<double>(r[1]), 1.0, 1e-10) << t << " " << n;
        }
    }
}

TEST(Invert, ExponentialPair) {
    // Measured: order 14 is off by 9.5e-7, order 18 in quad precision by 5.2e-9.
    const bh::InversionResult r = bh::invert(kExp, 1.0);
    EXPECT_NEAR(r.value, std::exp(-1.0), 1e-6);
    EXPECT_LT(r.err, 1e-5);
    EXPECT_GT(r.err, 0.0);

    const ExtendedTransform ext = [](const Extended& l) { return 1 / (l + 1); };
    const auto q = bh::invert_ladder(ext, 1.0, InversionConfig::extended(16, 18));
    EXPECT_NEAR(static_cast<double>(q[1]), std::exp(-1.0), 1e-8);
}

TEST(Invert, RampIsNotReproducedExactly) {
    // 1/lambda^2 -> t. Gaver-Stehfest is not exact on it: at t = 3 the error
    // is -1.08e-6 at order 14 and 7.5e-14 at order 28 (quad precision).
    const Transform ramp = [](double l) { return 1.0 / (l * l); };
    const double v = bh::invert_ladder(ramp, 3.0, double_ladder(12, 14))[1];
    EXPECT_NEAR(v - 3.0, -1.081e-6, 1e-9);

    const ExtendedTransform q = [](const Extended& l) { return 1 / (l * l); };
    const auto r = bh::invert_ladder(q, 3.0, InversionConfig::extended(24, 28));
    EXPECT_NEAR(static_cast<double>(r[1]), 3.0, 1e-12);
}

TEST(Invert, BrownianHittingCdf) {
    // exp(-sqrt(2 lambda)) is the transform of the level-1 hitting time of
    // Brownian motion; P(T <= 2) = erfc(1/2).
    const Transform cdf = [](double l) { return std::exp(-std::sqrt(2.0 * l)) / l; };
    EXPECT_NEAR(bh::invert(cdf, 2.0).value, std::erfc(0.5), 5e-6);
}

TEST(Invert, StepFunctionIsDegraded) {
    const Transform step = [](double l) { return std::exp(-l) / l; };
    const auto before = bh::invert_ladder(step, 0.5, {});
    const auto after = bh::invert_ladder(step, 1.5, {});
    EXPECT_NEAR(before[1], 0.0, 0.05);
    EXPECT_NEAR(after[1], 1.0, 0.05);
    // The ladder spread flags the loss of accuracy.
    EXPECT_GT(std::abs(before[1] - before[0]), 1e-2);
    EXPECT_GT(std::abs(after[1] - after[0]), 1e-2);
}

TEST(Invert, OscillatingOriginalIsRejected) {
    const Transform sine = [](double l) { return 1.0 / (l * l + 1.0); };
    EXPECT_THROW(bh::invert(sine, 20.0), bh::InstabilityError);
}

TEST(Invert, Errors) {
    EXPECT_THROW(bh::invert(kRecip, 0.0), bh::DomainError);
    EXPECT_THROW(bh::invert(kRecip, 1.0, InversionConfig::extended()), bh::ParameterError);
    EXPECT_THROW(bh::invert(kRecip, 1.0, double_ladder(3, 5)), bh::ParameterError);
}

TEST(InvertProperties, Linearity) {
    const double alpha = 2.5;
    const double beta = -0.75;
    const Transform combo = [&](double l) { return alpha * kExp(l) + beta * kRecip(l); };
    const InversionConfig cfg;
    for (double t : {0.3, 2.0, 9.0}) {
        const double lhs = bh::invert_ladder(combo, t, cfg)[1];
        const double rhs = alpha * bh::invert_ladder(kExp, t, cfg)[1] +
                           beta * bh::invert_ladder(kRecip, t, cfg)[1];
        EXPECT_NEAR(lhs, rhs, rounding_scale(combo, t)) << t;
    }

    const ExtendedTransform qexp = [](const Extended& l) { return 1 / (l + 1); };
    const ExtendedTransform qrecip = [](const Extended& l) { return 1 / l; };
    const ExtendedTransform qcombo = [&](const Extended& l) {
        return alpha * qexp(l) + beta * qrecip(l);
    };
    const InversionConfig qcfg = InversionConfig::extended();
    const Extended lhs = bh::invert_ladder(qcombo, 2.0, qcfg)[1];
    const Extended rhs = alpha * bh::invert_ladder(qexp, 2.0, qcfg)[1] +
                         beta * bh::invert_ladder(qrecip, 2.0, qcfg)[1];
    EXPECT_LT(static_cast<double>(abs(lhs - rhs)), 1e-16);
}

TEST(InvertProperties, Scaling) {
    // L^{-1}[phi(c lambda)](t) = f(t/c) / c.
    for (double c : {0.5, 2.5, 8.0}) {
        const Transform scaled = [&](double l) { return kExp(c * l); };
        for (double t : {0.4, 3.0}) {
            const double lhs = bh::invert_ladder(scaled, t, {})[1];
            const double rhs = bh::invert_ladder(kExp, t / c, {})[1] / c;
            EXPECT_NEAR(lhs, rhs, rounding_scale(scaled, t)) << c << " " << t;
        }
    }
}

TEST(InvertProperties, RungsShareSamples) {
    int calls = 0;
    const Transform counted = [&](double l) {
        ++calls;
        return kExp(l);
    };
    bh::invert_ladder(counted, 1.0, {});
    EXPECT_EQ(calls, 14);
}
