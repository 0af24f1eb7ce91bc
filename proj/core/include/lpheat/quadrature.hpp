#pragma once

#include <functional>
#include <span>

namespace lpheat {

/// Tolerances shared by every integral in the library.
struct QuadratureConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 20000;
    /// Gaussian factors are truncated this many standard deviations out.
    double tail_width_sigmas = 12.0;

    /// Throws ErrorKind::kDomain on non-positive tolerances, max_subdivisions < 1
    /// or tail_width_sigmas < 6.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;

    QuadResult& operator+=(const QuadResult& other) {
        value += other.value;
        abs_error += other.abs_error;
        evaluations += other.evaluations;
        return *this;
    }
};

using RealFunction = std::function<double(double)>;

/// How a half line [a, inf) is pulled back onto (0, 1].
enum class TailMap {
    kRational,     // x = a + (1 - w) / w; suits integrands decaying like x^-c, c > 1
    kLogarithmic,  // x = exp(log(a) / w), a > 1; suits 1 / (x log^k x) decay
};

enum class TailSign { kSigned, kNonNegative };

/// Global adaptive 21-point Gauss-Kronrod over [knots[0], knots.back()], with
/// every knot kept as a segment endpoint.  Throws AccuracyError when the
/// subdivision budget runs out before max(abs_tol, rel_tol |I|) is met.
QuadResult integrate(const RealFunction& f, std::span<const double> knots,
                     const QuadratureConfig& cfg);

/// Single interval; either end may be infinite.
QuadResult integrate(const RealFunction& f, double a, double b, const QuadratureConfig& cfg);

/// Knots followed by a half-line tail from knots.back(), all in one adaptive pass.
QuadResult integrate_with_tail(const RealFunction& f, std::span<const double> knots, TailMap map,
                               const QuadratureConfig& cfg);

/// Integral over [a, inf) of an integrand that oscillates with the given
/// half period and whose envelope decays like x^-decay.
///
/// kSigned sums half-period pieces and accelerates the alternating partial
/// sums with Wynn's epsilon algorithm.  kNonNegative sums whole periods
/// of the (periodic times power) integrand up to X and closes with the
/// envelope integral A X^(1-decay) / (decay - 1), Richardson-extrapolated
/// over doublings of X; it requires decay > 1.
QuadResult integrate_oscillatory_tail(const RealFunction& f, double a, double half_period,
                                      double decay, TailSign sign, const QuadratureConfig& cfg);

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Maximum of f on [a, b]: uniform scan with `samples` points, then
/// golden-section refinement around the best sample.
Extremum maximize(const RealFunction& f, double a, double b, int samples);

/// Golden-section search for a local maximum of f on [a, b].
Extremum golden_maximize(const RealFunction& f, double a, double b, double x_tol);

}  // namespace lpheat
