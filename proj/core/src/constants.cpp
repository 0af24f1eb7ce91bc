#include "lpheat/constants.hpp"

#include <cmath>
#include <numbers>

#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"

namespace lpheat {

ExponentTriple::ExponentTriple(Exponent p, Exponent q, Exponent r) : p_(p), q_(q), r_(r) {
    const double mismatch = p.reciprocal() + q.reciprocal() - 1.0 - r.reciprocal();
    if (std::abs(mismatch) > kRelationTol) {
        fail(ErrorKind::kDomain, "exponents violate 1/p + 1/q = 1 + 1/r: p=" + p.to_string() + " q=" +
                                     q.to_string() + " r=" + r.to_string());
    }
    // With the relation exact up to kRelationTol, r >= p and r >= q hold up to the same slack.
    if (r.reciprocal() > p.reciprocal() + kRelationTol || r.reciprocal() > q.reciprocal() + kRelationTol) {
        fail(ErrorKind::kDomain, "r must satisfy r >= p and r >= q");
    }
}

ExponentTriple r_from(Exponent p, Exponent q) {
    const double inv_r = p.reciprocal() + q.reciprocal() - 1.0;
    if (inv_r < -ExponentTriple::kRelationTol) {
        fail(ErrorKind::kNoValidExponent,
             "no valid r for p=" + p.to_string() + " q=" + q.to_string() + " (1/p + 1/q < 1)");
    }
    if (std::abs(inv_r) <= ExponentTriple::kRelationTol) return ExponentTriple(p, q, Exponent::infinity());
    return ExponentTriple(p, q, Exponent::from_reciprocal(inv_r));
}

double c_const(Exponent p) {
    if (p.is_one() || p.is_infinite()) return 1.0;
    const Exponent pc = conjugate(p);
    return std::pow(p.value(), 1.0 / p.value()) / std::pow(pc.value(), 1.0 / pc.value());
}

double young_constant(const ExponentTriple& tr) {
    return std::sqrt(c_const(tr.p()) * c_const(tr.q()) / c_const(tr.r()));
}

double K_const(const ExponentTriple& tr) { return young_constant(tr) * alpha(tr.q()); }

double L_const(const ExponentTriple& tr) { return young_constant(tr) * delta(tr.q()); }

double M_const(Exponent p) {
    using std::numbers::pi;
    if (p.is_infinite()) fail(ErrorKind::kUnsupported, "M_p is defined for 1 <= p < inf");
    if (p.is_one()) return 1.0 / (4.0 * std::sqrt(pi));
    const double v = p.value();
    return std::pow(3.0, 1.0 / v) * std::pow(v - 1.0, 1.0 - 1.0 / v) /
           (std::pow(2.0, 1.0 + 2.0 / v) * std::sqrt(pi) * std::pow(v, 1.0 - 1.0 / v));
}

double beta_extremizer(Exponent p, Exponent q) {
    if (p.is_one() && q.is_one()) return 1.0;
    if (p.is_one()) return Exponent::kInf;
    if (q.is_one()) return 0.0;
    return (1.0 - q.reciprocal()) / (1.0 - p.reciprocal());
}

double young_equality_rhs(const ExponentTriple& tr) {
    const auto power_term = [](Exponent e) {
        const double a = 1.0 - e.reciprocal();
        return a == 0.0 ? 1.0 : std::pow(a, a);
    };
    return power_term(tr.p()) * power_term(tr.q()) / power_term(tr.r());
}

}  // namespace lpheat
