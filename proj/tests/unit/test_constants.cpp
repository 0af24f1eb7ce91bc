#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpheat/constants.hpp"
#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"

using namespace lpheat;

TEST_CASE("triples complete r") {
    CHECK(r_from(Exponent(2.0), Exponent(1.0)).r().value() == doctest::Approx(2.0));
    CHECK(r_from(Exponent(2.0), Exponent(2.0)).r().is_infinite());
    CHECK(r_from(Exponent(1.5), Exponent(1.5)).r().value() == doctest::Approx(3.0));
    CHECK(r_from(Exponent(1.0), Exponent::infinity()).r().is_infinite());
    try {
        r_from(Exponent(2.0), Exponent(3.0));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kNoValidExponent);
    }
    CHECK_THROWS_AS(ExponentTriple(Exponent(2.0), Exponent(1.0), Exponent(3.0)), Error);
}

TEST_CASE("c_p values") {
    CHECK(c_const(Exponent(1.0)) == 1.0);
    CHECK(c_const(Exponent::infinity()) == 1.0);
    CHECK(c_const(Exponent(2.0)) == doctest::Approx(1.0));
    CHECK(c_const(Exponent(4.0)) == doctest::Approx(1.1397535284773888).epsilon(1e-14));
    // c_p c_p' = 1.
    for (double p : {1.25, 1.5, 3.0, 7.0}) {
        CHECK(c_const(Exponent(p)) * c_const(conjugate(Exponent(p))) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("young constants at the q = 1 and p = 1 edges") {
    const auto tr = r_from(Exponent(2.0), Exponent(1.0));
    CHECK(young_constant(tr) == doctest::Approx(1.0));
    CHECK(K_const(tr) == doctest::Approx(1.0));
    CHECK(L_const(tr) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK(young_constant(r_from(Exponent(1.0), Exponent(1.0))) == 1.0);
    for (double p : {1.25, 1.5, 2.0, 3.0}) {
        for (double q : {1.25, 1.5, 2.0, 3.0}) {
            if (1.0 / p + 1.0 / q < 1.0) continue;
            const double c = young_constant(r_from(Exponent(p), Exponent(q)));
            CHECK(c > 0.0);
            CHECK(c <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("M_p") {
    CHECK(M_const(Exponent(1.0)) == doctest::Approx(1.0 / (4.0 * std::sqrt(std::numbers::pi))));
    CHECK(M_const(Exponent(2.0)) == doctest::Approx(0.17274707473566774).epsilon(1e-14));
    CHECK_THROWS_AS(M_const(Exponent::infinity()), Error);
}

TEST_CASE("extremal beta solves the equality condition") {
    CHECK(beta_extremizer(Exponent(2.0), Exponent(4.0 / 3.0)) == doctest::Approx(0.5));
    CHECK(std::isinf(beta_extremizer(Exponent(1.0), Exponent(2.0))));
    CHECK(beta_extremizer(Exponent(2.0), Exponent(1.0)) == 0.0);
    CHECK(beta_extremizer(Exponent(1.0), Exponent(1.0)) == 1.0);
    for (double p : {1.25, 1.5, 2.0, 3.0}) {
        for (double q : {1.25, 1.5, 2.0, 3.0}) {
            if (1.0 / p + 1.0 / q < 1.0) continue;
            const auto tr = r_from(Exponent(p), Exponent(q));
            const double beta = beta_extremizer(tr.p(), tr.q());
            const double a = 1.0 - tr.q().reciprocal();
            const double b = 1.0 - tr.r().reciprocal();
            const double lhs = std::pow(beta, a) / std::pow(beta + 1.0, b);
            CHECK(lhs == doctest::Approx(young_equality_rhs(tr)).epsilon(1e-13));
            const double ratio = alpha(tr.p()) * alpha(tr.q()) / alpha(tr.r());
            const double via_constants = c_const(tr.p()) * c_const(tr.q()) / c_const(tr.r()) * ratio * ratio;
            CHECK(via_constants == doctest::Approx(young_equality_rhs(tr)).epsilon(1e-13));
        }
    }
}
