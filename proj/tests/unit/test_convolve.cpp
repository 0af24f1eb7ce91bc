#include <doctest.h>

#include <cmath>

#include "lpheat/constants.hpp"
#include "lpheat/convolve.hpp"
#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"

using namespace lpheat;

namespace {

const QuadratureConfig kCfg{};

double max_abs_diff(const GridFunction& a, const RealFunction& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - f(a.x(i))));
    return worst;
}

}  // namespace

TEST_CASE("pointwise convolutions") {
    const auto ind = PrimitiveFunction::indicator(-1.0, 1.0);
    CHECK(convolve_point(ind, 0, 1.0, 0.0, kCfg) == doctest::Approx(0.5204998778130465).epsilon(1e-14));
    CHECK(convolve_point_quadrature(ind, 0, 1.0, 0.0, kCfg) == doctest::Approx(0.5204998778130465).epsilon(1e-12));
    CHECK(std::abs(convolve_point(ind, 1, 1.0, 0.0, kCfg)) < 1e-16);
    CHECK(std::abs(convolve_point_quadrature(ind, 1, 1.0, 0.0, kCfg)) < 1e-14);

    const auto gauss = PrimitiveFunction::gaussian_power(1.0, 1.0);
    for (double x : {-3.0, -0.5, 0.0, 1.2, 6.0}) {
        CHECK(convolve_point(gauss, 0, 1.0, x, kCfg) == doctest::Approx(theta(KernelPoint(x, 2.0))).epsilon(1e-12));
        CHECK(convolve_point(gauss, 1, 1.0, x, kCfg) ==
              doctest::Approx(theta_deriv(KernelPoint(x, 2.0), 1)).epsilon(1e-11).scale(1e-3));
    }
    CHECK(convolve_point(PrimitiveFunction::zero(), 2, 1.0, 0.3, kCfg) == 0.0);
    CHECK_THROWS_AS(convolve_point(ind, 9, 1.0, 0.0, kCfg), Error);
    CHECK_THROWS_AS(convolve_point(ind, 0, 0.0, 0.0, kCfg), Error);
}

TEST_CASE("step terms: closed form agrees with quadrature") {
    const auto combo = PrimitiveFunction::step_combo({{1.0, -1.0, 0.0}, {-0.5, 0.0, 2.0}});
    for (int n = 0; n <= 3; ++n) {
        for (double x : {-2.0, -0.3, 0.0, 1.1, 4.0}) {
            CHECK(convolve_point(combo, n, 0.4, x, kCfg) ==
                  doctest::Approx(convolve_point_quadrature(combo, n, 0.4, x, kCfg)).epsilon(1e-10).scale(1e-3));
        }
    }
}

TEST_CASE("far-field evaluation of slowly decaying data") {
    const auto tl = PrimitiveFunction::tail_log(2.0);
    for (double x : {1e6, 1e12, 1e20}) {
        CHECK(convolve_point(tl, 0, 1.0, x, kCfg) == doctest::Approx(tl(x)).epsilon(1e-10));
    }
}

TEST_CASE("linearity and translation") {
    const auto f = PrimitiveFunction::gaussian_power(0.5, 2.0);
    const auto g = PrimitiveFunction::tail_log(2.0);
    const auto h = PrimitiveFunction::indicator(0.0, 1.0);
    for (double x : {-1.0, 0.4, 3.0}) {
        const double combined = convolve_point(f.scaled(2.0) + g.scaled(-3.0) + h, 0, 0.7, x, kCfg);
        const double separate = 2.0 * convolve_point(f, 0, 0.7, x, kCfg) - 3.0 * convolve_point(g, 0, 0.7, x, kCfg) +
                                convolve_point(h, 0, 0.7, x, kCfg);
        CHECK(combined == doctest::Approx(separate).epsilon(1e-11));
        CHECK(convolve_point(f.shifted(1.5), 1, 0.7, x + 1.5, kCfg) ==
              doctest::Approx(convolve_point(f, 1, 0.7, x, kCfg)).epsilon(1e-11).scale(1e-3));
    }
}

TEST_CASE("grid convolution") {
    const double dx = 0.01;
    auto ind = GridFunction::sample([](double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; }, -4.0, 4.0, 801);
    const auto conv = convolve_grid(ind, 1.0, 0);
    CHECK(conv.size() == ind.size());
    CHECK(conv.dx() == doctest::Approx(dx));
    const std::size_t mid = 400;
    CHECK(conv[mid] == doctest::Approx(convolve_point(PrimitiveFunction::sampled(ind), 0, 1.0, 0.0, kCfg)).epsilon(5e-4));
    // Endpoint nodes at +-1 widen the sampled indicator by about dx / 2 on each side.
    CHECK(conv[mid] == doctest::Approx(convolve_point(PrimitiveFunction::indicator(-1.005, 1.005), 0, 1.0, 0.0, kCfg))
                           .epsilon(5e-4));

    const auto theta1 = GridFunction::sample([](double x) { return theta(KernelPoint(x, 1.0)); }, -20.0, 20.0, 801);
    const auto theta2 = convolve_grid(theta1, 1.0, 0);
    CHECK(max_abs_diff(theta2, [](double x) { return theta(KernelPoint(x, 2.0)); }) < 5e-4);
    const auto dtheta2 = convolve_grid(theta1, 1.0, 1);
    CHECK(max_abs_diff(dtheta2, [](double x) { return theta_deriv(KernelPoint(x, 2.0), 1); }) < 5e-4);

    const auto zero = convolve_grid(GridFunction(0.0, 0.1, std::vector<double>(50, 0.0)), 1.0, 2);
    for (double v : zero.values()) CHECK(v == 0.0);

    try {
        convolve_grid(GridFunction(0.0, 0.5, {1.0, 1.0, 1.0}), 0.1, 0);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kResolution);
    }
}

TEST_CASE("grid convolution obeys Young's inequality") {
    const auto samples = GridFunction::sample([](double x) { return std::exp(-std::abs(x)) * std::cos(2.0 * x); },
                                              -15.0, 15.0, 1501);
    const auto f = PrimitiveFunction::sampled(samples);
    const double t = 0.5;
    for (const auto& [p, q] : {std::pair{2.0, 1.0}, std::pair{1.5, 1.5}, std::pair{1.0, 2.0}, std::pair{2.0, 2.0}}) {
        const auto tr = r_from(Exponent(p), Exponent(q));
        const auto conv = PrimitiveFunction::sampled(convolve_grid(samples, t, 0));
        const double lhs = lp_norm(conv, tr.r(), kCfg);
        const double rhs = young_constant(tr) * lp_norm(f, tr.p(), kCfg) * theta_norm_closed(tr.q(), t);
        CHECK(lhs <= rhs * (1.0 + 1e-3));
    }
}

TEST_CASE("differentiation under the convolution") {
    const auto ind = PrimitiveFunction::indicator(0.0, 1.0);
    double previous_error = 0.0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        const auto d = convolve_smooth_derivative_check(ind, 1.0, 1, 0.3, h, kCfg);
        const double error = std::abs(d.lhs - d.rhs);
        if (previous_error > 0.0) CHECK(previous_error / error == doctest::Approx(4.0).epsilon(0.02));
        previous_error = error;
    }
    const auto gauss = PrimitiveFunction::gaussian_power(1.0, 1.0);
    const auto d = convolve_smooth_derivative_check(gauss, 1.0, 2, 0.0, 1e-3, kCfg);
    CHECK(std::abs(d.lhs - d.rhs) < 1e-6);
    for (int n = 1; n <= 3; ++n) {
        const double e1 = std::abs([&] {
            const auto c = convolve_smooth_derivative_check(gauss, 0.5, n, 0.7, 0.02, kCfg);
            return c.lhs - c.rhs;
        }());
        const double e2 = std::abs([&] {
            const auto c = convolve_smooth_derivative_check(gauss, 0.5, n, 0.7, 0.01, kCfg);
            return c.lhs - c.rhs;
        }());
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
    }
    const auto z = convolve_smooth_derivative_check(PrimitiveFunction::zero(), 1.0, 1, 0.0, 1e-3, kCfg);
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
}

TEST_CASE("convolution norms") {
    const auto gauss = PrimitiveFunction::gaussian_power(1.0, 1.0);
    CHECK(convolution_norm(gauss, 0, 1.0, Exponent(2.0), kCfg) ==
          doctest::Approx(theta_norm_closed(Exponent(2.0), 2.0)).epsilon(1e-10));
    CHECK(convolution_norm(gauss, 0, 1.0, Exponent::infinity(), kCfg) ==
          doctest::Approx(theta_norm_closed(Exponent::infinity(), 2.0)).epsilon(1e-10));
    CHECK(convolution_norm(gauss, 1, 1.0, Exponent(3.0), kCfg) ==
          doctest::Approx(theta_deriv_norm_closed(Exponent(3.0), 2.0)).epsilon(1e-9));
}
