#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/quadrature.hpp"

using namespace lpheat;

namespace {

// Reference values computed with mpmath at 30 digits.
constexpr double kAlpha2 = 0.44662192086900115;
constexpr double kDelta2 = 0.22331096043450063;
constexpr double kAlpha15 = 0.572929612268586;
constexpr double kDelta15 = 0.2991482075973098;
constexpr double kAlpha3 = 0.35815952291268505;
constexpr double kDelta3 = 0.17086675175433616;
constexpr double kAlpha4 = 0.32549086320654136;
constexpr double kDelta4 = 0.1514516894466721;
constexpr double kDeltaInf = 0.12098536225957168;

double quad_norm(int n, double q, double t) {
    QuadratureConfig cfg;
    const auto f = [&](double x) { return std::pow(std::abs(theta_deriv(KernelPoint(x, t), n)), q); };
    const double w = 40.0 * std::sqrt(t);
    const double knots[] = {-w, -std::sqrt(2.0 * t), 0.0, std::sqrt(2.0 * t), w};
    return std::pow(integrate(f, knots, cfg).value, 1.0 / q);
}

}  // namespace

TEST_CASE("theta values") {
    CHECK(theta(KernelPoint(0.0, 1.0)) == doctest::Approx(0.28209479177387814).epsilon(1e-15));
    CHECK(theta(KernelPoint(2.0, 1.0)) - theta(KernelPoint(0.0, 1.0)) ==
          doctest::Approx(-0.17831791741872946).epsilon(1e-14));
    CHECK(theta(KernelPoint(1.5, 0.7)) == doctest::Approx(theta(KernelPoint(-1.5, 0.7))).epsilon(1e-15));
}

TEST_CASE("kernel arguments are validated") {
    CHECK_THROWS_AS(KernelPoint(0.0, 0.0), Error);
    CHECK_THROWS_AS(KernelPoint(0.0, -1.0), Error);
    CHECK_THROWS_AS(KernelPoint(NAN, 1.0), Error);
    try {
        theta_deriv(KernelPoint(0.0, 1.0), 9);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kUnsupported);
    }
    CHECK_THROWS_AS(theta_power(KernelPoint(0.0, 1.0), 0.0), Error);
}

TEST_CASE("derivative recurrence matches finite differences") {
    const double h = 1e-4;
    for (int n = 1; n <= 8; ++n) {
        for (double x : {-2.3, -0.4, 0.0, 0.9, 3.1}) {
            const double fd = (theta_deriv(KernelPoint(x + h, 0.8), n - 1) -
                               theta_deriv(KernelPoint(x - h, 0.8), n - 1)) /
                              (2.0 * h);
            CHECK(theta_deriv(KernelPoint(x, 0.8), n) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("heat equation holds pointwise") {
    const double h = 1e-5;
    for (double x : {-1.0, 0.3, 2.0}) {
        const double t = 0.6;
        const double dt = (theta(KernelPoint(x, t + h)) - theta(KernelPoint(x, t - h))) / (2.0 * h);
        CHECK(theta_time_deriv(KernelPoint(x, t)) == doctest::Approx(dt).epsilon(1e-7));
    }
}

TEST_CASE("alpha and delta tables") {
    CHECK(alpha(Exponent(1.0)) == 1.0);
    CHECK(alpha(Exponent::infinity()) == doctest::Approx(1.0 / (2.0 * std::sqrt(std::numbers::pi))));
    CHECK(alpha(Exponent(2.0)) == doctest::Approx(kAlpha2).epsilon(1e-14));
    CHECK(alpha(Exponent(1.5)) == doctest::Approx(kAlpha15).epsilon(1e-14));
    CHECK(alpha(Exponent(3.0)) == doctest::Approx(kAlpha3).epsilon(1e-14));
    CHECK(alpha(Exponent(4.0)) == doctest::Approx(kAlpha4).epsilon(1e-14));
    CHECK(delta(Exponent(1.0)) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(delta(Exponent(2.0)) == doctest::Approx(kDelta2).epsilon(1e-14));
    CHECK(delta(Exponent(1.5)) == doctest::Approx(kDelta15).epsilon(1e-14));
    CHECK(delta(Exponent(3.0)) == doctest::Approx(kDelta3).epsilon(1e-14));
    CHECK(delta(Exponent(4.0)) == doctest::Approx(kDelta4).epsilon(1e-14));
    CHECK(delta(Exponent::infinity()) == doctest::Approx(kDeltaInf).epsilon(1e-14));
}

TEST_CASE("closed-form norms against quadrature") {
    for (double q : {1.0, 1.5, 2.0, 3.0}) {
        for (double t : {0.01, 1.0, 100.0}) {
            CHECK(theta_norm_closed(Exponent(q), t) == doctest::Approx(quad_norm(0, q, t)).epsilon(1e-10));
            CHECK(theta_deriv_norm_closed(Exponent(q), t) == doctest::Approx(quad_norm(1, q, t)).epsilon(1e-10));
        }
    }
}

TEST_CASE("time scaling of the norms") {
    const Exponent q(2.5);
    const double ratio = theta_norm_closed(q, 4.0) / theta_norm_closed(q, 1.0);
    CHECK(ratio == doctest::Approx(std::pow(4.0, -theta_norm_time_exponent(q))));
    CHECK(theta_deriv_norm_time_exponent(Exponent(1.0)) == 0.5);
}

TEST_CASE("semigroup residual is tiny") {
    QuadratureConfig cfg;
    CHECK(semigroup_residual(1.0, 1.0, SampleRange{}, cfg) < 1e-12);
    CHECK(semigroup_residual(0.25, 3.0, SampleRange{-5.0, 5.0, 41}, cfg) < 1e-12);
    CHECK_THROWS_AS(semigroup_residual(1.0, 0.0, SampleRange{}, cfg), Error);
}
