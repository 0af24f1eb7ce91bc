#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lpheat/exponent.hpp"
#include "lpheat/grid.hpp"
#include "lpheat/quadrature.hpp"

namespace lpheat {

/// The closed-form catalog of L^p functions plus sampled data.
namespace shape {

/// chi_[a,b]; in L^s for every s.
struct Indicator {
    double a, b;
};

struct Step {
    double height, a, b;
};

/// sum of height * chi_[a,b]; in L^s for every s.
struct StepCombo {
    std::vector<Step> steps;
};

/// Theta_t(x)^beta; in L^s for every s.
struct GaussianPower {
    double t, beta;
};

/// x^(-1/p) / log^2(x) for x >= e, 0 otherwise; in L^s iff s >= p.
struct TailLog {
    double p;
};

/// x^(-1/p) sin(x) for x > 1, 0 otherwise; in L^s iff s > p.
struct TruncatedSine {
    double p;
};

/// Linear interpolation of grid samples, 0 outside the grid; in L^s for every s.
struct Sampled {
    GridFunction grid;
};

}  // namespace shape

using Shape = std::variant<shape::Indicator, shape::StepCombo, shape::GaussianPower, shape::TailLog,
                           shape::TruncatedSine, shape::Sampled>;

/// Behaviour of a function to the right of its last profile knot.
enum class TailKind {
    kNone,         // zero or negligible (Gaussian truncation) beyond the last knot
    kLogPower,     // smooth, decaying like x^-decay up to log factors
    kOscillatory,  // x^-decay times a function alternating sign every half_period
};

/// Integration layout of a real function: segment endpoints that must be
/// respected (jumps, kinks, narrow features) and the shape of the right tail.
struct LineProfile {
    std::vector<double> knots;
    TailKind tail = TailKind::kNone;
    double decay = 0.0;
    double half_period = 0.0;

    /// Profile of |h|^s given the profile of h.
    LineProfile raised_to(double s) const;
    /// Profile of a sum: merged knots and tails; throws kUnsupported on mixed tail kinds.
    static LineProfile merge(const LineProfile& a, const LineProfile& b);
    /// Profile of a product: merged knots, a tail only when both factors have one.
    static LineProfile product(const LineProfile& a, const LineProfile& b);
};

/// An L^p function F: a finite linear combination c_i F_i(x - h_i) of
/// catalog shapes.  Values are immutable after construction.
class PrimitiveFunction {
public:
    struct Term {
        double coef = 1.0;
        double shift = 0.0;
        Shape shape;
    };

    PrimitiveFunction() = default;  // the zero function

    static PrimitiveFunction zero() { return {}; }
    /// Throws ErrorKind::kDomain unless a < b.
    static PrimitiveFunction indicator(double a, double b);
    static PrimitiveFunction step_combo(std::vector<shape::Step> steps);
    /// Throws ErrorKind::kDomain unless t > 0 and beta > 0.
    static PrimitiveFunction gaussian_power(double t, double beta);
    /// Throws ErrorKind::kDomain unless 1 <= p < inf.
    static PrimitiveFunction tail_log(double p);
    static PrimitiveFunction truncated_sine(double p);
    static PrimitiveFunction sampled(GridFunction grid);
    /// Sum of already validated terms, e.g. a subset of another function's terms().
    static PrimitiveFunction from_terms(std::vector<Term> terms);

    double operator()(double x) const;

    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True when every term is an Indicator or StepCombo.
    bool is_step_function() const;
    /// Steps of a step function, shifted and scaled; kPrecondition otherwise.
    std::vector<shape::Step> steps() const;
    /// True when every term vanishes outside a bounded interval.
    bool has_compact_support() const;
    /// Convex hull of the support; infinite ends for tails, +-(W sigma) for Gaussians.
    std::pair<double, double> support(double tail_width_sigmas = 12.0) const;
    /// Upper bound on sup |F|.
    double sup_bound() const;
    /// Whether F belongs to L^s by the membership rule of each term.
    bool admits(Exponent s) const;

    LineProfile profile(double tail_width_sigmas) const;

    PrimitiveFunction scaled(double c) const;
    /// x -> F(x - h).
    PrimitiveFunction shifted(double h) const;

    friend PrimitiveFunction operator+(const PrimitiveFunction& a, const PrimitiveFunction& b);
    friend PrimitiveFunction operator-(const PrimitiveFunction& a, const PrimitiveFunction& b);
    friend PrimitiveFunction operator*(double c, const PrimitiveFunction& f) { return f.scaled(c); }

private:
    explicit PrimitiveFunction(Term term) { terms_.push_back(std::move(term)); }
    std::vector<Term> terms_;
};

double evaluate(const PrimitiveFunction& f, double x);

/// ||F||_p by adaptive quadrature; the essential sup for p = inf.
/// Throws ErrorKind::kMembership when F is not in L^p.
double lp_norm(const PrimitiveFunction& f, Exponent p, const QuadratureConfig& cfg);

/// int_0^x g.  x may be +-inf when g is improperly integrable there.
double antiderivative(const PrimitiveFunction& g, double x, const QuadratureConfig& cfg);

/// Integral of h over [a, b] (either end may be infinite) following the profile.
QuadResult integrate_over(const RealFunction& h, const LineProfile& profile, double a, double b, TailSign sign,
                          const QuadratureConfig& cfg);

/// L^p norm of an arbitrary function laid out by `profile`.  For p = inf,
/// `resolution` is the scan spacing used before golden-section refinement.
double lp_norm_of(const RealFunction& h, const LineProfile& profile, Exponent p, double resolution,
                  const QuadratureConfig& cfg);

/// sup |h| over the profile's finite part and the start of its tail.
double sup_abs_of(const RealFunction& h, const LineProfile& profile, double resolution);

}  // namespace lpheat
