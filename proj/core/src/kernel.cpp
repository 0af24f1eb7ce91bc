#include "lpheat/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lpheat/error.hpp"
#include "lpheat/special.hpp"

namespace lpheat {

using std::numbers::pi;

KernelPoint::KernelPoint(double x, double t) : x_(x), t_(t) {
    if (!std::isfinite(x) || !std::isfinite(t)) fail(ErrorKind::kDomain, "kernel arguments must be finite");
    if (!(t > 0.0)) fail(ErrorKind::kDomain, "kernel time must be > 0");
}

double theta(KernelPoint pt) {
    const double t = pt.t();
    return std::exp(-pt.x() * pt.x() / (4.0 * t)) / (2.0 * std::sqrt(pi * t));
}

double theta_deriv(KernelPoint pt, int n) {
    if (n < 0) fail(ErrorKind::kDomain, "derivative order must be >= 0");
    if (n > kMaxDerivativeOrder) {
        fail(ErrorKind::kUnsupported, "derivative order " + std::to_string(n) + " exceeds maximum " +
                                          std::to_string(kMaxDerivativeOrder));
    }
    const double base = theta(pt);
    if (n == 0) return base;
    const double a = pt.x() / (2.0 * pt.t());
    const double b = 1.0 / (2.0 * pt.t());
    double previous = base;
    double current = -a * base;
    for (int k = 2; k <= n; ++k) {
        const double next = -a * current - (k - 1) * b * previous;
        previous = current;
        current = next;
    }
    return current;
}

double theta_time_deriv(KernelPoint pt) { return theta_deriv(pt, 2); }

double theta_power(KernelPoint pt, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) fail(ErrorKind::kDomain, "kernel power must be finite and > 0");
    return std::pow(theta(pt), beta);
}

double alpha(Exponent q) {
    if (q.is_one()) return 1.0;
    if (q.is_infinite()) return 1.0 / (2.0 * std::sqrt(pi));
    const double v = q.value();
    return 1.0 / (std::pow(2.0 * std::sqrt(pi), 1.0 - 1.0 / v) * std::pow(v, 1.0 / (2.0 * v)));
}

double delta(Exponent q) {
    if (q.is_one()) return 1.0 / std::sqrt(pi);
    if (q.is_infinite()) return 1.0 / (std::pow(2.0, 1.5) * std::sqrt(pi * std::numbers::e));
    const double v = q.value();
    return std::pow(special::gamma((v + 1.0) / 2.0), 1.0 / v) /
           (std::pow(2.0, 1.0 - 1.0 / v) * std::sqrt(pi) * std::pow(v, (1.0 + 1.0 / v) / 2.0));
}

double theta_norm_time_exponent(Exponent q) { return (1.0 - q.reciprocal()) / 2.0; }
double theta_deriv_norm_time_exponent(Exponent q) { return (2.0 - q.reciprocal()) / 2.0; }

double theta_norm_closed(Exponent q, double t) {
    if (!(t > 0.0)) fail(ErrorKind::kDomain, "norm time must be > 0");
    return alpha(q) / std::pow(t, theta_norm_time_exponent(q));
}

double theta_deriv_norm_closed(Exponent q, double t) {
    if (!(t > 0.0)) fail(ErrorKind::kDomain, "norm time must be > 0");
    return delta(q) / std::pow(t, theta_deriv_norm_time_exponent(q));
}

double semigroup_residual(double t, double s, const SampleRange& range, const QuadratureConfig& cfg) {
    if (!(t + s > 0.0)) fail(ErrorKind::kDomain, "semigroup needs t + s > 0");
    if (!(t > 0.0) || !(s > 0.0)) fail(ErrorKind::kDomain, "semigroup residual is provided for t, s > 0 only");
    if (range.count < 1 || !(range.hi >= range.lo)) fail(ErrorKind::kDomain, "bad sample range");
    const double width_s = cfg.tail_width_sigmas * std::sqrt(2.0 * s);
    double worst = 0.0;
    for (int i = 0; i < range.count; ++i) {
        const double x = range.count == 1 ? range.lo
                                          : range.lo + (range.hi - range.lo) * i / (range.count - 1);
        // The product Theta_t(x - y) Theta_s(y) peaks at y = x s / (t + s).
        const double peak = std::clamp(x * s / (t + s), -width_s, width_s);
        const std::array<double, 3> knots{-width_s, peak, width_s};
        const auto integrand = [&](double y) { return theta({x - y, t}) * theta({y, s}); };
        const double conv = integrate(integrand, knots, cfg).value;
        worst = std::max(worst, std::abs(conv - theta({x, t + s})));
    }
    return worst;
}

double theta_norm_quadrature(int n, Exponent q, double t, const QuadratureConfig& cfg) {
    if (!(t > 0.0)) fail(ErrorKind::kDomain, "t must be > 0");
    const auto g = [n, t](double x) { return theta_deriv(KernelPoint(x, t), n); };
    const double sigma = std::sqrt(2.0 * t);
    const double w = cfg.tail_width_sigmas * sigma * 2.0;
    if (q.is_infinite()) {
        const auto abs_g = [&g](double x) { return std::abs(g(x)); };
        return maximize(abs_g, -w, w, 4001).value;
    }
    const double s = q.value();
    const auto powered = [&g, s](double x) { return std::pow(std::abs(g(x)), s); };
    const std::array<double, 7> knots{-w, -2.0 * sigma, -sigma, 0.0, sigma, 2.0 * sigma, w};
    return std::pow(integrate(powered, knots, cfg).value, 1.0 / s);
}

}  // namespace lpheat
