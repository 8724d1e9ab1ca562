#include "besselhit/laplace_inversion.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace besselhit {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

// V_k = (-1)^(k+M) sum_{j=floor((k+1)/2)}^{min(k,M)}
//       j^M (2j)! / ((M-j)! j! (j-1)! (k-j)! (2j-k)!),  M = order/2.
std::vector<cpp_rational> exact_weights(int order) {
    const int half = order / 2;
    std::vector<cpp_rational> w;
    w.reserve(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) {
        cpp_rational acc = 0;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            cpp_int num = boost::multiprecision::pow(cpp_int(j), static_cast<unsigned>(half)) *
                          factorial(2 * j);
            cpp_int den = factorial(half - j) * factorial(j) * factorial(j - 1) *
                          factorial(k - j) * factorial(2 * j - k);
            acc += cpp_rational(num, den);
        }
        w.push_back(((k + half) % 2 == 0) ? acc : cpp_rational(-acc));
    }
    return w;
}

void check_order(int order, int max_order) {
    if (order < kMinStehfestOrder || order > max_order || order % 2 != 0) {
        throw ParameterError("Gaver-Stehfest order must be even and in [" +
                             std::to_string(kMinStehfestOrder) + ", " +
                             std::to_string(max_order) + "], got " + std::to_string(order));
    }
}

template <class Real>
Real to_real(const cpp_rational& r);

template <>
double to_real<double>(const cpp_rational& r) {
    return r.convert_to<double>();
}

template <>
Extended to_real<Extended>(const cpp_rational& r) {
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    return Extended(num.str()) / Extended(den.str());
}

// Tables for every admissible order, built once on first use.
template <class Real>
const std::vector<std::vector<Real>>& weight_tables() {
    static const std::vector<std::vector<Real>> tables = [] {
        std::vector<std::vector<Real>> t(kMaxStehfestOrderExtended + 1);
        for (int order = 2; order <= kMaxStehfestOrderExtended; order += 2) {
            for (const auto& v : exact_weights(order)) {
                t[static_cast<std::size_t>(order)].push_back(to_real<Real>(v));
            }
        }
        return t;
    }();
    return tables;
}

double acceptance_scale(double value) { return std::max(std::abs(value), 1e-12); }

InversionResult accept(double high, double low) {
    const double err = std::abs(high - low);
    if (!std::isfinite(high) || err > 1e-3 * acceptance_scale(high)) {
        throw InstabilityError("Laplace inversion unstable: order ladder disagrees (value " +
                               brief(high) + ", spread " + brief(err) + ")");
    }
    return {high, err};
}

void check_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("Laplace inversion: t must be > 0");
    }
}

}  // namespace

void InversionConfig::validate() const {
    const int max_order = max_stehfest_order(precision);
    check_order(order, max_order);
    check_order(ladder[0], max_order);
    check_order(ladder[1], max_order);
    if (ladder[0] == ladder[1]) {
        throw ParameterError("inversion ladder orders must be distinct");
    }
    if (order != std::max(ladder[0], ladder[1])) {
        throw ParameterError("inversion order must equal the higher ladder rung");
    }
}

InversionConfig InversionConfig::extended(int low, int high) {
    return InversionConfig{std::max(low, high), {low, high}, Precision::Extended};
}

int max_stehfest_order(Precision precision) {
    return precision == Precision::Double ? kMaxStehfestOrderDouble : kMaxStehfestOrderExtended;
}

std::vector<double> stehfest_weights(int order) {
    check_order(order, kMaxStehfestOrderExtended);
    return weight_tables<double>()[static_cast<std::size_t>(order)];
}

const std::vector<double>& stehfest_weights_double(int order) {
    check_order(order, kMaxStehfestOrderExtended);
    return weight_tables<double>()[static_cast<std::size_t>(order)];
}

const std::vector<Extended>& stehfest_weights_extended(int order) {
    check_order(order, kMaxStehfestOrderExtended);
    return weight_tables<Extended>()[static_cast<std::size_t>(order)];
}

std::array<double, 2> invert_ladder(const Transform& phi, double t, const InversionConfig& cfg) {
    cfg.validate();
    check_time(t);
    if (cfg.precision != Precision::Double) {
        throw ParameterError("a double-precision transform needs Precision::Double");
    }
    auto [low, high] = std::minmax(cfg.ladder[0], cfg.ladder[1]);
    return detail::stehfest_ladder<double>(phi, t, low, high);
}

std::array<Extended, 2> invert_ladder(const ExtendedTransform& phi, double t,
                                      const InversionConfig& cfg) {
    cfg.validate();
    check_time(t);
    auto [low, high] = std::minmax(cfg.ladder[0], cfg.ladder[1]);
    return detail::stehfest_ladder<Extended>(phi, Extended(t), low, high);
}

InversionResult invert(const Transform& phi, double t, const InversionConfig& cfg) {
    const auto rungs = invert_ladder(phi, t, cfg);
    return accept(rungs[1], rungs[0]);
}

InversionResult invert(const ExtendedTransform& phi, double t, const InversionConfig& cfg) {
    const auto rungs = invert_ladder(phi, t, cfg);
    return accept(static_cast<double>(rungs[1]), static_cast<double>(rungs[0]));
}

}  // namespace besselhit
