#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/lp_space.hpp"

using namespace lpheat;

namespace {

const QuadratureConfig kCfg{};

ErrorKind kind_of(const auto& call) {
    try {
        call();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::kDomain;
}

}  // namespace

TEST_CASE("pointwise values") {
    CHECK(evaluate(PrimitiveFunction::indicator(0.0, 1.0), 0.5) == 1.0);
    CHECK(evaluate(PrimitiveFunction::indicator(0.0, 1.0), 1.5) == 0.0);
    CHECK(evaluate(PrimitiveFunction::tail_log(2.0), std::numbers::e) == doctest::Approx(0.60653065971263342));
    CHECK(evaluate(PrimitiveFunction::tail_log(2.0), 2.0) == 0.0);
    CHECK(evaluate(PrimitiveFunction::gaussian_power(1.0, 1.0), 0.0) == doctest::Approx(0.28209479177387814));
    CHECK(evaluate(PrimitiveFunction::truncated_sine(1.0), 2.0) == doctest::Approx(std::sin(2.0) / 2.0));
    CHECK(evaluate(PrimitiveFunction::truncated_sine(1.0), 0.5) == 0.0);
    const auto s = PrimitiveFunction::sampled(GridFunction(0.0, 0.5, {0.0, 1.0, 3.0}));
    CHECK(evaluate(s, 0.75) == doctest::Approx(2.0));
    CHECK(evaluate(s, 1.5) == 0.0);
    CHECK(evaluate(PrimitiveFunction::indicator(0.0, 1.0).shifted(2.0), 2.5) == 1.0);
}

TEST_CASE("constructors validate") {
    CHECK(kind_of([] { PrimitiveFunction::indicator(1.0, 1.0); }) == ErrorKind::kDomain);
    CHECK(kind_of([] { PrimitiveFunction::gaussian_power(0.0, 1.0); }) == ErrorKind::kDomain);
    CHECK(kind_of([] { PrimitiveFunction::gaussian_power(1.0, -1.0); }) == ErrorKind::kDomain);
    CHECK(kind_of([] { PrimitiveFunction::tail_log(0.5); }) == ErrorKind::kDomain);
    CHECK(kind_of([] { PrimitiveFunction::truncated_sine(INFINITY); }) == ErrorKind::kDomain);
    CHECK(kind_of([] { PrimitiveFunction::step_combo({{1.0, 2.0, 1.0}}); }) == ErrorKind::kDomain);
}

TEST_CASE("closed-form norms") {
    CHECK(lp_norm(PrimitiveFunction::indicator(0.0, 1.0), Exponent(3.0), kCfg) == doctest::Approx(1.0));
    CHECK(lp_norm(PrimitiveFunction::indicator(-2.0, 2.0), Exponent(2.0), kCfg) == doctest::Approx(2.0));
    CHECK(lp_norm(PrimitiveFunction::gaussian_power(1.0, 1.0), Exponent(2.0), kCfg) ==
          doctest::Approx(0.44662192086900115).epsilon(1e-12));
    CHECK(lp_norm(PrimitiveFunction::gaussian_power(0.3, 1.0), Exponent(1.0), kCfg) ==
          doctest::Approx(1.0).epsilon(1e-12));
    for (double q : {1.5, 3.0, 4.0}) {
        CHECK(lp_norm(PrimitiveFunction::gaussian_power(2.0, 1.0), Exponent(q), kCfg) ==
              doctest::Approx(theta_norm_closed(Exponent(q), 2.0)).epsilon(1e-11));
    }
    const auto combo = PrimitiveFunction::step_combo({{1.0, -1.0, 0.0}, {-0.5, 0.0, 2.0}, {2.0, 1.0, 1.5}});
    // Pieces: 1 on [-1,0), -0.5 on [0,1), 1.5 on [1,1.5), -0.5 on [1.5,2).
    CHECK(lp_norm(combo, Exponent(2.0), kCfg) ==
          doctest::Approx(std::sqrt(1.0 + 0.25 + 0.5 * 2.25 + 0.5 * 0.25)).epsilon(1e-14));
    CHECK(lp_norm(combo, Exponent::infinity(), kCfg) == 1.5);
}

TEST_CASE("sampled norms are exact for piecewise-linear data") {
    auto hat = GridFunction::sample([](double x) { return 1.0 - std::abs(x); }, -1.0, 1.0, 201);
    const auto f = PrimitiveFunction::sampled(hat);
    CHECK(lp_norm(f, Exponent(2.0), kCfg) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
    CHECK(lp_norm(f, Exponent(3.0), kCfg) == doctest::Approx(std::cbrt(0.5)).epsilon(1e-13));
    CHECK(lp_norm(f, Exponent::infinity(), kCfg) == 1.0);
    // A sign change inside a cell.
    const auto g = PrimitiveFunction::sampled(GridFunction(0.0, 1.0, {1.0, -1.0}));
    CHECK(lp_norm(g, Exponent(1.0), kCfg) == doctest::Approx(0.5));
}

TEST_CASE("tails: membership and norms") {
    const auto tl = PrimitiveFunction::tail_log(2.0);
    CHECK(kind_of([&] { lp_norm(tl, Exponent(1.0), kCfg); }) == ErrorKind::kMembership);
    CHECK(kind_of([&] { lp_norm(tl, Exponent(1.9), kCfg); }) == ErrorKind::kMembership);
    CHECK(lp_norm(tl, Exponent(2.0), kCfg) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(lp_norm(tl, Exponent(3.0), kCfg) == doctest::Approx(0.47652642952505087).epsilon(1e-10));
    CHECK(lp_norm(tl, Exponent::infinity(), kCfg) == doctest::Approx(std::exp(-0.5)));
    CHECK(lp_norm(PrimitiveFunction::tail_log(1.0), Exponent(1.0), kCfg) == doctest::Approx(1.0).epsilon(1e-10));

    const auto ts = PrimitiveFunction::truncated_sine(1.0);
    CHECK(kind_of([&] { lp_norm(ts, Exponent(1.0), kCfg); }) == ErrorKind::kMembership);
    // sqrt(sin^2 1 + pi/2 - Si(2)).
    CHECK(lp_norm(ts, Exponent(2.0), kCfg) == doctest::Approx(0.82064411791334553).epsilon(1e-9));
    CHECK(lp_norm(ts, Exponent::infinity(), kCfg) == doctest::Approx(std::sin(1.0)));
    const auto ts2 = PrimitiveFunction::truncated_sine(2.0);
    CHECK(kind_of([&] { lp_norm(ts2, Exponent(2.0), kCfg); }) == ErrorKind::kMembership);
    CHECK(lp_norm(ts2, Exponent(3.0), kCfg) == doctest::Approx(1.0179209587432247).epsilon(1e-8));
}

TEST_CASE("partial integrals below the membership exponent keep growing") {
    const auto tl = PrimitiveFunction::tail_log(2.0);
    const auto profile = tl.profile(kCfg.tail_width_sigmas);
    const auto f = [&](double x) { return std::abs(tl(x)); };
    double previous = 0.0;
    for (double x = 64.0; x <= 1 << 20; x *= 4.0) {
        const double partial = integrate_over(f, profile, std::numbers::e, x, TailSign::kNonNegative, kCfg).value;
        CHECK(partial > previous * 1.2);
        previous = partial;
    }
}

TEST_CASE("norm properties") {
    const auto f = PrimitiveFunction::sampled(
        GridFunction::sample([](double x) { return std::sin(3.0 * x) * std::exp(-x * x); }, -3.0, 3.0, 301));
    const auto g = PrimitiveFunction::gaussian_power(0.5, 2.0);
    for (double p : {1.0, 2.0, 3.5}) {
        const Exponent e(p);
        CHECK(lp_norm(f + g, e, kCfg) <= lp_norm(f, e, kCfg) + lp_norm(g, e, kCfg) + 1e-12);
        CHECK(lp_norm(f.scaled(-2.5), e, kCfg) == doctest::Approx(2.5 * lp_norm(f, e, kCfg)).epsilon(1e-12));
        CHECK(lp_norm(g.shifted(1.7), e, kCfg) == doctest::Approx(lp_norm(g, e, kCfg)).epsilon(1e-11));
        const auto tl = PrimitiveFunction::tail_log(1.0);
        CHECK(lp_norm(tl.shifted(-3.0), e, kCfg) == doctest::Approx(lp_norm(tl, e, kCfg)).epsilon(1e-9));
    }
}

TEST_CASE("antiderivatives") {
    const auto ind = PrimitiveFunction::indicator(0.0, 1.0);
    CHECK(antiderivative(ind, 2.0, kCfg) == doctest::Approx(1.0));
    CHECK(antiderivative(ind, 0.25, kCfg) == doctest::Approx(0.25));
    CHECK(antiderivative(ind, -1.0, kCfg) == 0.0);
    const auto gauss = PrimitiveFunction::gaussian_power(1.0, 1.0);
    CHECK(antiderivative(gauss, INFINITY, kCfg) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(antiderivative(gauss, -INFINITY, kCfg) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(antiderivative(gauss, 2.0, kCfg) == doctest::Approx(0.5 * std::erf(1.0)).epsilon(1e-12));
    // int_1^inf sin x / x.
    CHECK(antiderivative(PrimitiveFunction::truncated_sine(1.0), INFINITY, kCfg) ==
          doctest::Approx(0.6247132564277136).epsilon(1e-10));
    CHECK(kind_of([] { antiderivative(PrimitiveFunction::tail_log(2.0), INFINITY, kCfg); }) == ErrorKind::kMembership);
}

TEST_CASE("support and structure") {
    const auto f = PrimitiveFunction::indicator(0.0, 1.0) + PrimitiveFunction::indicator(2.0, 3.0).scaled(2.0);
    CHECK(f.is_step_function());
    CHECK(f.has_compact_support());
    CHECK(f.support().first == 0.0);
    CHECK(f.support().second == 3.0);
    CHECK(f.steps().size() == 2);
    CHECK(f.sup_bound() == 2.0);
    const auto g = f + PrimitiveFunction::tail_log(2.0);
    CHECK_FALSE(g.is_step_function());
    CHECK(std::isinf(g.support().second));
    CHECK(g.admits(Exponent(2.0)));
    CHECK_FALSE(g.admits(Exponent(1.5)));
    CHECK(kind_of([&] { g.steps(); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] {
              (PrimitiveFunction::tail_log(2.0) + PrimitiveFunction::truncated_sine(1.0)).profile(12.0);
          }) == ErrorKind::kUnsupported);
    CHECK(PrimitiveFunction::zero().is_zero());
    CHECK(lp_norm(PrimitiveFunction::zero(), Exponent(2.0), kCfg) == 0.0);
}
