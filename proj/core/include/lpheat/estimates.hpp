#pragma once

#include <utility>
#include <vector>

#include "lpheat/constants.hpp"
#include "lpheat/lprime.hpp"
#include "lpheat/report.hpp"

namespace lpheat {

/// ||f * Theta_t||'_r against K_{p,q} ||f||'_p t^-((1-1/q)/2).
EstimateReport verify_lprime_bound(const LprimeElement& f, const ExponentTriple& tr, double t,
                                   const QuadratureConfig& cfg, double tolerance = 1e-6);

/// ||f * Theta_t||_r (the solution itself) against L_{p,q} ||f||'_p t^-((2-1/q)/2).
EstimateReport verify_lr_bound(const LprimeElement& f, const ExponentTriple& tr, double t,
                               const QuadratureConfig& cfg, double tolerance = 1e-6);

/// 1 - ||F * Theta_t||_r / (C_{p,q} ||F||_p ||Theta_t||_q) for F = Theta_t^beta.
/// Any beta > 0; the boundary cases p = 1 or q = 1 approach 0 only in a limit of beta.
double young_gap_at(Exponent p, Exponent q, double t, double beta, const QuadratureConfig& cfg);

/// young_gap_at with the extremal beta; kDomain for p = 1 or q = 1.
double young_equality_gap(Exponent p, Exponent q, double t, const QuadratureConfig& cfg);

/// int v_t over the line.
double zero_integral(const LprimeElement& f, double t, const QuadratureConfig& cfg);

struct SignWitnesses {
    double x_neg, v_neg;  // v_t(x_neg) = v_neg < -tol
    double x_pos, v_pos;  // v_t(x_pos) = v_pos > tol
};

/// Points where v_t takes each sign, from a 2001-point scan of [lo, hi]
/// refined by golden-section search.  Throws ErrorKind::kSearch when either
/// sign is missing in the interval.
SignWitnesses sign_change(const LprimeElement& f, double t, double lo, double hi, double tol,
                          const QuadratureConfig& cfg);

/// max(|v_t(x)|, |v_t(-x)|) for each x.
std::vector<double> limit_at_infinity(const LprimeElement& f, double t, const std::vector<double>& xs,
                                      const QuadratureConfig& cfg);

/// Pointwise bound for data supported in [-R, R]:
///   p = 1: M_1 ||f||'_1 |x| exp(-(|x| - R)^2 / 4t) t^-3/2,       |x| >= R + sqrt(2t)
///   p > 1: M_p ||f||'_p |x|^(1/p) exp(-x^2 / 16t) t^-(1/2 + 1/p), |x| >= 2R
double decay_bound(Exponent p, double norm, double radius, double t, double x);

/// max over xs of |v_t(x)| / decay_bound.  Throws kPrecondition when the
/// primitive is not supported in [-R, R] or an x lies outside its branch range.
EstimateReport decay_bound_check(const LprimeElement& f, double radius, double t, const std::vector<double>& xs,
                                 const QuadratureConfig& cfg, double tolerance = 1e-9);

/// (1/sqrt(pi)) int_0^(a/sqrt t) exp(-y^2) dy for each t, by quadrature:
/// the lower bound on the variation of v_t - f for f = delta_-a - delta_a.
std::vector<double> variation_lower_bound(double a, const std::vector<double>& ts, const QuadratureConfig& cfg);

struct NonmembershipSample {
    double x;
    double conv_ratio;   // (F * Theta_t)(x) / F(x)
    double lower_ratio;  // erf((x - e) / (2 sqrt t)) / 2, the certified lower bound on conv_ratio
};

/// Probe of F * Theta_t for F = TailLog(p) along xs.  Throws kDomain unless 1 <= s < p.
std::vector<NonmembershipSample> nonmembership_probe(double p, double s, double t, const std::vector<double>& xs,
                                                     const QuadratureConfig& cfg);

/// int_e^X |F * Theta_t|^s for X = 64 * 2^k up to x_max, F = TailLog(p).
/// Throws kDomain unless 1 <= s < p.
std::vector<std::pair<double, double>> nonmembership_partial_integrals(double p, double s, double t, double x_max,
                                                                       const QuadratureConfig& cfg);

/// ||F_t * Theta_t||_r t^((1-1/q)/2) / ||F_t||_p for F_t = Theta_t along ts;
/// stays bounded away from 0, which is what makes the rate in the L'^r bound sharp.
std::vector<double> rate_sharpness_shadow(const ExponentTriple& tr, const std::vector<double>& ts,
                                          const QuadratureConfig& cfg);

}  // namespace lpheat
