#pragma once

#include "lpheat/exponent.hpp"
#include "lpheat/quadrature.hpp"

namespace lpheat {

/// Argument (x, t) of the Gauss-Weierstrass kernel; t > 0 is enforced.
class KernelPoint {
public:
    /// Throws ErrorKind::kDomain for t <= 0 or non-finite input.
    KernelPoint(double x, double t);

    double x() const noexcept { return x_; }
    double t() const noexcept { return t_; }

private:
    double x_;
    double t_;
};

inline constexpr int kMaxDerivativeOrder = 8;

/// Theta_t(x) = exp(-x^2 / 4t) / (2 sqrt(pi t)).
double theta(KernelPoint pt);

/// n-th x-derivative, 0 <= n <= kMaxDerivativeOrder, from the Hermite-type
/// recurrence Theta^(n) = -(x/2t) Theta^(n-1) - ((n-1)/2t) Theta^(n-2).
double theta_deriv(KernelPoint pt, int n);

/// d Theta / dt.  The kernel solves the heat equation, so this is Theta''.
double theta_time_deriv(KernelPoint pt);

/// Theta_t(x)^beta for beta > 0.
double theta_power(KernelPoint pt, double beta);

/// alpha_q, the t-free factor of ||Theta_t||_q.
double alpha(Exponent q);
/// delta_q, the t-free factor of ||Theta'_t||_q.
double delta(Exponent q);

/// ||Theta_t||_q = alpha_q / t^((1 - 1/q) / 2).
double theta_norm_closed(Exponent q, double t);
/// ||Theta'_t||_q = delta_q / t^((2 - 1/q) / 2).
double theta_deriv_norm_closed(Exponent q, double t);

/// Power of t in the closed-form norms: theta_norm_closed = alpha / t^exponent.
double theta_norm_time_exponent(Exponent q);
double theta_deriv_norm_time_exponent(Exponent q);

/// ||Theta_t^(n)||_q by adaptive quadrature (q < inf) or a sampled and
/// golden-section refined maximum (q = inf); independent of the closed forms.
double theta_norm_quadrature(int n, Exponent q, double t, const QuadratureConfig& cfg);

/// Evaluation points for semigroup_residual.
struct SampleRange {
    double lo = -10.0;
    double hi = 10.0;
    int count = 201;
};

/// max over the range of |(Theta_t * Theta_s)(x) - Theta_{t+s}(x)|, with the
/// convolution done by quadrature.  Requires t > 0 and s > 0.
double semigroup_residual(double t, double s, const SampleRange& range, const QuadratureConfig& cfg);

}  // namespace lpheat
