#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpheat/error.hpp"
#include "lpheat/quadrature.hpp"

using namespace lpheat;
using std::numbers::pi;

TEST_CASE("finite and infinite intervals") {
    QuadratureConfig cfg;
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0, cfg).value == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg).value ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -INFINITY, INFINITY, cfg).value ==
          doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, INFINITY, cfg).value ==
          doctest::Approx(pi / 2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return x; }, 2.0, 0.0, cfg).value == doctest::Approx(-2.0));
}

TEST_CASE("knots keep jumps on segment ends") {
    QuadratureConfig cfg;
    const auto step = [](double x) { return x < 0.3 ? 1.0 : -2.0; };
    const double knots[] = {0.0, 0.3, 1.0};
    CHECK(integrate(step, knots, cfg).value == doctest::Approx(0.3 - 1.4).epsilon(1e-14));
}

TEST_CASE("logarithmic tail map") {
    QuadratureConfig cfg;
    const auto f = [](double x) { return 1.0 / (x * std::log(x) * std::log(x)); };
    const double knots[] = {std::numbers::e};
    CHECK(integrate_with_tail(f, knots, TailMap::kLogarithmic, cfg).value == doctest::Approx(1.0).epsilon(1e-12));
    const double bad[] = {0.5};
    CHECK_THROWS_AS(integrate_with_tail(f, bad, TailMap::kLogarithmic, cfg), Error);
}

TEST_CASE("oscillatory tails") {
    QuadratureConfig cfg;
    // int_1^inf sin x / x = pi/2 - Si(1).
    const auto r = integrate_oscillatory_tail([](double x) { return std::sin(x) / x; }, 1.0, pi, 1.0,
                                              TailSign::kSigned, cfg);
    CHECK(r.value == doctest::Approx(0.6247132564277136).epsilon(1e-10));
    // int_1^inf sin^2 x / x^2 = sin^2 1 + pi/2 - Si(2).
    const auto s = integrate_oscillatory_tail([](double x) { return std::pow(std::sin(x) / x, 2.0); }, 1.0, pi, 2.0,
                                              TailSign::kNonNegative, cfg);
    CHECK(s.value == doctest::Approx(0.67345676826577296).epsilon(1e-10));
    CHECK_THROWS_AS(integrate_oscillatory_tail([](double x) { return std::pow(std::sin(x), 2.0) / x; }, 1.0, pi, 1.0,
                                               TailSign::kNonNegative, cfg),
                    Error);
}

TEST_CASE("subdivision budget is reported") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    try {
        integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, cfg);
        FAIL("expected throw");
    } catch (const AccuracyError& e) {
        CHECK(e.kind() == ErrorKind::kAccuracy);
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("config validation") {
    QuadratureConfig cfg;
    cfg.tail_width_sigmas = 4.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = QuadratureConfig{};
    cfg.abs_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("maximization") {
    const auto m = maximize([](double x) { return -(x - 0.37) * (x - 0.37); }, -1.0, 1.0, 50);
    CHECK(m.x == doctest::Approx(0.37).epsilon(1e-7));
    const auto g = golden_maximize([](double x) { return std::sin(x); }, 0.0, 3.0, 1e-10);
    CHECK(g.x == doctest::Approx(pi / 2).epsilon(1e-8));
}
