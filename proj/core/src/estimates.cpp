#include "lpheat/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lpheat/convolve.hpp"
#include "lpheat/error.hpp"
#include "lpheat/heat_solver.hpp"
#include "lpheat/io.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/parallel.hpp"

namespace lpheat {

namespace {

QuadratureConfig outer_config(const QuadratureConfig& cfg) {
    QuadratureConfig outer = cfg;
    outer.rel_tol = cfg.rel_tol * 100.0;
    return outer;
}

std::vector<std::pair<std::string, double>> triple_params(const ExponentTriple& tr, double t) {
    return {{"p", tr.p().value()}, {"q", tr.q().value()}, {"r", tr.r().value()}, {"t", t}};
}

void require_matching_p(const LprimeElement& f, const ExponentTriple& tr) {
    if (!(f.p() == tr.p())) {
        fail(ErrorKind::kPrecondition, "element has p = " + f.p().to_string() + " but the triple has p = " +
                                           tr.p().to_string());
    }
}

void require_nonmembership_exponents(double p, double s) {
    if (!(s >= 1.0) || !(s < p) || !std::isfinite(p)) {
        fail(ErrorKind::kDomain, "nonmembership probe needs 1 <= s < p < inf");
    }
}

}  // namespace

EstimateReport verify_lprime_bound(const LprimeElement& f, const ExponentTriple& tr, double t,
                                   const QuadratureConfig& cfg, double tolerance) {
    require_matching_p(f, tr);
    const double measured = convolution_norm(f.primitive(), 0, t, tr.r(), cfg);
    const double bound = K_const(tr) * lprime_norm(f, cfg) * std::pow(t, -theta_norm_time_exponent(tr.q()));
    return make_report("lprime_bound", measured, bound, tolerance, triple_params(tr, t));
}

EstimateReport verify_lr_bound(const LprimeElement& f, const ExponentTriple& tr, double t,
                               const QuadratureConfig& cfg, double tolerance) {
    require_matching_p(f, tr);
    double measured = 0.0;
    if (!f.primitive().is_zero()) {
        const auto profile = convolution_profile(f.primitive(), t, cfg, 1);
        const auto v = [&](double x) { return solve_at(f, t, x, cfg); };
        measured = lp_norm_of(v, profile, tr.r(), std::sqrt(2.0 * t) / 16.0, outer_config(cfg));
    }
    const double bound = L_const(tr) * lprime_norm(f, cfg) * std::pow(t, -theta_deriv_norm_time_exponent(tr.q()));
    return make_report("lr_bound", measured, bound, tolerance, triple_params(tr, t));
}

double young_gap_at(Exponent p, Exponent q, double t, double beta, const QuadratureConfig& cfg) {
    const auto tr = r_from(p, q);
    // Theta_t^beta is a multiple of Theta_{t/beta}; the ratio is scale invariant
    const auto F = PrimitiveFunction::gaussian_power(t / beta, 1.0);
    const double lhs = convolution_norm(F, 0, t, tr.r(), cfg);
    const auto kernel = PrimitiveFunction::gaussian_power(t, 1.0);
    const double rhs = young_constant(tr) * lp_norm(F, p, cfg) * lp_norm(kernel, q, cfg);
    return 1.0 - lhs / rhs;
}

double young_equality_gap(Exponent p, Exponent q, double t, const QuadratureConfig& cfg) {
    if (p.is_one() || q.is_one()) {
        fail(ErrorKind::kDomain, "p = 1 or q = 1 has no finite extremal beta; use young_gap_at with a limit of beta");
    }
    if (p.is_infinite()) fail(ErrorKind::kDomain, "p = inf has no extremal Gaussian power");
    return young_gap_at(p, q, t, beta_extremizer(p, q), cfg);
}

double zero_integral(const LprimeElement& f, double t, const QuadratureConfig& cfg) {
    if (f.primitive().is_zero()) return 0.0;
    const auto profile = convolution_profile(f.primitive(), t, cfg, 1);
    const auto v = [&](double x) { return solve_at(f, t, x, cfg); };
    return integrate_over(v, profile, -Exponent::kInf, Exponent::kInf, TailSign::kSigned, outer_config(cfg)).value;
}

SignWitnesses sign_change(const LprimeElement& f, double t, double lo, double hi, double tol,
                          const QuadratureConfig& cfg) {
    if (!(hi > lo)) fail(ErrorKind::kDomain, "search interval needs lo < hi");
    constexpr int kSamples = 2001;
    std::vector<double> values(kSamples);
    const double step = (hi - lo) / (kSamples - 1);
    parallel_for(values.size(), [&](std::size_t i) { values[i] = solve_at(f, t, lo + step * i, cfg); });
    const auto min_it = std::min_element(values.begin(), values.end());
    const auto max_it = std::max_element(values.begin(), values.end());
    const auto refine = [&](std::ptrdiff_t index, double sign) {
        const double center = lo + step * static_cast<double>(index);
        const double a = std::max(lo, center - step);
        const double b = std::min(hi, center + step);
        const auto best = golden_maximize([&](double x) { return sign * solve_at(f, t, x, cfg); }, a, b,
                                          1e-9 * std::max(1.0, hi - lo));
        return best.value > sign * values[static_cast<std::size_t>(index)] ? best
                                                                            : Extremum{center, sign * values[static_cast<std::size_t>(index)]};
    };
    if (!(*min_it < -tol) || !(*max_it > tol)) {
        fail(ErrorKind::kSearch, "no sign change of v_t found in [" + format_real(lo) + ", " + format_real(hi) +
                                     "]; widen the interval");
    }
    const auto neg = refine(min_it - values.begin(), -1.0);
    const auto pos = refine(max_it - values.begin(), 1.0);
    return {neg.x, -neg.value, pos.x, pos.value};
}

std::vector<double> limit_at_infinity(const LprimeElement& f, double t, const std::vector<double>& xs,
                                      const QuadratureConfig& cfg) {
    std::vector<double> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        out[i] = std::max(std::abs(solve_at(f, t, xs[i], cfg)), std::abs(solve_at(f, t, -xs[i], cfg)));
    });
    return out;
}

double decay_bound(Exponent p, double norm, double radius, double t, double x) {
    if (p.is_infinite()) fail(ErrorKind::kUnsupported, "decay bound needs p < inf");
    const double ax = std::abs(x);
    if (p.is_one()) {
        if (ax < radius + std::sqrt(2.0 * t)) {
            fail(ErrorKind::kPrecondition, "p = 1 decay bound needs |x| >= R + sqrt(2t)");
        }
        const double d = ax - radius;
        return M_const(p) * norm * ax * std::exp(-d * d / (4.0 * t)) * std::pow(t, -1.5);
    }
    if (ax < 2.0 * radius) fail(ErrorKind::kPrecondition, "p > 1 decay bound needs |x| >= 2R");
    return M_const(p) * norm * std::pow(ax, p.reciprocal()) * std::exp(-x * x / (16.0 * t)) *
           std::pow(t, -(0.5 + p.reciprocal()));
}

EstimateReport decay_bound_check(const LprimeElement& f, double radius, double t, const std::vector<double>& xs,
                                 const QuadratureConfig& cfg, double tolerance) {
    const auto& F = f.primitive();
    std::vector<std::pair<std::string, double>> params{{"p", f.p().value()}, {"R", radius}, {"t", t}};
    if (F.is_zero()) return make_report("decay_bound", 0.0, 1.0, tolerance, std::move(params));
    const auto [lo, hi] = F.support(cfg.tail_width_sigmas);
    if (!F.has_compact_support() || lo < -radius || hi > radius) {
        fail(ErrorKind::kPrecondition, "primitive is not supported in [-R, R]");
    }
    const double norm = lprime_norm(f, cfg);
    double worst = 0.0;
    for (double x : xs) {
        const double bound = decay_bound(f.p(), norm, radius, t, x);
        const double v = std::abs(solve_at(f, t, x, cfg));
        // Both sides underflow together far out; 0 <= 0 holds.
        const double ratio = bound > 0.0 ? v / bound : (v == 0.0 ? 0.0 : Exponent::kInf);
        worst = std::max(worst, ratio);
    }
    return make_report("decay_bound", worst, 1.0, tolerance, std::move(params));
}

std::vector<double> variation_lower_bound(double a, const std::vector<double>& ts, const QuadratureConfig& cfg) {
    if (!(a > 0.0)) fail(ErrorKind::kDomain, "variation bound needs a > 0");
    std::vector<double> out;
    out.reserve(ts.size());
    const auto gauss = [](double y) { return std::exp(-y * y); };
    for (double t : ts) {
        if (!(t > 0.0)) fail(ErrorKind::kDomain, "time must be > 0");
        const double upper = a / std::sqrt(t);
        // Beyond y = 40 the integrand is below 1e-690.
        const double capped = std::min(upper, 40.0);
        const double knots[] = {0.0, std::min(capped, 1.0), std::min(capped, 4.0), capped};
        out.push_back(integrate(gauss, knots, cfg).value / std::sqrt(std::numbers::pi));
    }
    return out;
}

std::vector<NonmembershipSample> nonmembership_probe(double p, double s, double t, const std::vector<double>& xs,
                                                     const QuadratureConfig& cfg) {
    require_nonmembership_exponents(p, s);
    if (!(t > 0.0)) fail(ErrorKind::kDomain, "time must be > 0");
    const auto F = PrimitiveFunction::tail_log(p);
    std::vector<NonmembershipSample> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const double x = xs[i];
        if (!(x > std::numbers::e)) fail(ErrorKind::kDomain, "probe points must exceed e");
        const double fx = F(x);
        out[i] = {x, convolve_point(F, 0, t, x, cfg) / fx, 0.5 * std::erf((x - std::numbers::e) / (2.0 * std::sqrt(t)))};
    });
    return out;
}

std::vector<std::pair<double, double>> nonmembership_partial_integrals(double p, double s, double t, double x_max,
                                                                       const QuadratureConfig& cfg) {
    require_nonmembership_exponents(p, s);
    const auto F = PrimitiveFunction::tail_log(p);
    const auto profile = convolution_profile(F, t, cfg);
    const auto powered = [&](double x) { return std::pow(std::abs(convolve_point(F, 0, t, x, cfg)), s); };
    std::vector<std::pair<double, double>> out;
    double total = integrate_over(powered, profile, -Exponent::kInf, 64.0, TailSign::kNonNegative, outer_config(cfg)).value;
    out.emplace_back(64.0, total);
    for (double x = 64.0; 2.0 * x <= x_max; x *= 2.0) {
        total += integrate(powered, x, 2.0 * x, outer_config(cfg)).value;
        out.emplace_back(2.0 * x, total);
    }
    return out;
}

std::vector<double> rate_sharpness_shadow(const ExponentTriple& tr, const std::vector<double>& ts,
                                          const QuadratureConfig& cfg) {
    std::vector<double> out(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto F = PrimitiveFunction::gaussian_power(t, 1.0);
        const double lhs = convolution_norm(F, 0, t, tr.r(), cfg);
        out[i] = lhs * std::pow(t, theta_norm_time_exponent(tr.q())) / lp_norm(F, tr.p(), cfg);
    });
    return out;
}

}  // namespace lpheat
