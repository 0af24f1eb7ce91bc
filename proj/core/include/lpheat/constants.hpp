#pragma once

#include "lpheat/exponent.hpp"

namespace lpheat {

/// Exponents (p, q, r) tied by 1/p + 1/q = 1 + 1/r.
class ExponentTriple {
public:
    /// Tolerance on the exponent relation checked at construction.
    static constexpr double kRelationTol = 1e-12;

    /// Validates the relation and r >= max(p, q); throws ErrorKind::kDomain otherwise.
    ExponentTriple(Exponent p, Exponent q, Exponent r);

    Exponent p() const noexcept { return p_; }
    Exponent q() const noexcept { return q_; }
    Exponent r() const noexcept { return r_; }

private:
    Exponent p_;
    Exponent q_;
    Exponent r_;
};

/// Completes (p, q) with r; r = inf for conjugate p, q.
/// Throws ErrorKind::kNoValidExponent when 1/p + 1/q < 1.
ExponentTriple r_from(Exponent p, Exponent q);

/// c_p = p^(1/p) / (p')^(1/p'), with c_1 = c_inf = 1.
double c_const(Exponent p);

/// Sharp Young constant C_{p,q} = (c_p c_q / c_r)^(1/2), in (0, 1].
double young_constant(const ExponentTriple& tr);

/// K_{p,q} = C_{p,q} alpha_q: sharp constant of ||f * Theta_t||'_r <= K ||f||'_p t^-((1-1/q)/2).
double K_const(const ExponentTriple& tr);

/// L_{p,q} = C_{p,q} delta_q: constant of ||f * Theta_t||_r <= L ||f||'_p t^-((2-1/q)/2).
double L_const(const ExponentTriple& tr);

/// Pointwise decay constant for compactly supported data, p in [1, inf).
/// Throws ErrorKind::kUnsupported for p = inf.
double M_const(Exponent p);

/// Gaussian-power exponent beta = (1 - 1/q) / (1 - 1/p) with Theta_t^beta
/// extremal in Young's inequality.  Returns +inf for p = 1 (limit beta -> inf),
/// 0 for q = 1 (limit beta -> 0+), and 1 for p = q = 1 where every beta is extremal.
double beta_extremizer(Exponent p, Exponent q);

/// Right-hand side of the extremizer equation, in the product form
/// (1-1/p)^(1-1/p) (1-1/q)^(1-1/q) (1-1/r)^-(1-1/r).
double young_equality_rhs(const ExponentTriple& tr);

}  // namespace lpheat
