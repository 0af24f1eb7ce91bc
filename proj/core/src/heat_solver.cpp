#include "lpheat/heat_solver.hpp"

#include <cmath>
#include <string>

#include "lpheat/convolve.hpp"
#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"
#include "lpheat/parallel.hpp"

namespace lpheat {

namespace {

QuadratureConfig outer_config(const QuadratureConfig& cfg) {
    QuadratureConfig outer = cfg;
    outer.rel_tol = cfg.rel_tol * 100.0;
    return outer;
}

// Profile of F * Theta_t - F.
LineProfile difference_profile(const PrimitiveFunction& F, double t, const QuadratureConfig& cfg) {
    return LineProfile::merge(convolution_profile(F, t, cfg), F.profile(cfg.tail_width_sigmas));
}

// exp(-1/u) for u > 0, else 0.
double bump_half(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

}  // namespace

double solve_at(const LprimeElement& f, double t, double x, const QuadratureConfig& cfg) {
    if (const auto& atoms = f.atoms()) {
        if (!(t > 0.0)) fail(ErrorKind::kDomain, "time must be > 0");
        double sum = 0.0;
        for (const auto& atom : *atoms) sum += atom.weight * theta(KernelPoint(x - atom.location, t));
        return sum;
    }
    return convolve_point(f.primitive(), 1, t, x, cfg);
}

double solve_primitive_at(const LprimeElement& f, double t, double x, const QuadratureConfig& cfg) {
    return convolve_point(f.primitive(), 0, t, x, cfg);
}

Solution solve_on_grid(const LprimeElement& f, double t, const GridSpec& grid, const QuadratureConfig& cfg) {
    if (grid.count < 2) fail(ErrorKind::kDomain, "grid needs at least two nodes");
    std::vector<double> values(static_cast<std::size_t>(grid.count));
    parallel_for(values.size(), [&](std::size_t i) {
        values[i] = solve_at(f, t, grid.node(static_cast<int>(i)), cfg);
    });
    return Solution{t, GridFunction(grid.lo, (grid.hi - grid.lo) / (grid.count - 1), std::move(values))};
}

double pde_residual(const LprimeElement& f, double x, double t, double h_x, double h_t,
                    const QuadratureConfig& cfg) {
    if (!(h_x > 0.0) || !(h_t > 0.0)) fail(ErrorKind::kDomain, "stencil widths must be > 0");
    if (!(t - h_t > 0.0)) fail(ErrorKind::kPrecondition, "time stencil reaches t <= 0");
    const double center = solve_at(f, t, x, cfg);
    const double dxx = (solve_at(f, t, x + h_x, cfg) - 2.0 * center + solve_at(f, t, x - h_x, cfg)) / (h_x * h_x);
    const double dt = (solve_at(f, t + h_t, x, cfg) - solve_at(f, t - h_t, x, cfg)) / (2.0 * h_t);
    return dxx - dt;
}

std::vector<double> default_time_sequence() {
    std::vector<double> ts;
    for (int k = 0; k <= 14; ++k) ts.push_back(std::ldexp(1.0, -k));
    return ts;
}

std::vector<double> ic_convergence(const LprimeElement& f, const std::vector<double>& ts,
                                   const QuadratureConfig& cfg) {
    std::vector<double> out(ts.size(), 0.0);
    const auto& F = f.primitive();
    if (F.is_zero()) return out;
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto diff = [&](double x) { return convolve_point(F, 0, t, x, cfg) - F(x); };
        out[i] = lp_norm_of(diff, difference_profile(F, t, cfg), f.p(), std::sqrt(2.0 * t) / 16.0, outer_config(cfg));
    });
    return out;
}

std::vector<double> norm_limit_check(const LprimeElement& f, const std::vector<double>& ts,
                                     const QuadratureConfig& cfg) {
    std::vector<double> out(ts.size(), 0.0);
    parallel_for(ts.size(), [&](std::size_t i) { out[i] = convolution_norm(f.primitive(), 0, ts[i], f.p(), cfg); });
    return out;
}

TestFunction gaussian_test(double width) {
    if (!(width > 0.0)) fail(ErrorKind::kDomain, "test function width must be > 0");
    const double s2 = 2.0 * width * width;
    TestFunction phi;
    phi.name = "gaussian";
    phi.phi = [s2](double x) { return std::exp(-x * x / s2); };
    phi.dphi = [s2](double x) { return -2.0 * x / s2 * std::exp(-x * x / s2); };
    const double reach = width * std::sqrt(2.0 * 40.0);
    phi.profile.knots = {-reach, -width, 0.0, width, reach};
    return phi;
}

TestFunction plateau_test(double radius, double width) {
    if (!(radius >= 0.0) || !(width > 0.0)) fail(ErrorKind::kDomain, "plateau needs radius >= 0 and width > 0");
    // Smooth step from 1 (u <= 0) to 0 (u >= 1).
    const auto step = [](double u) {
        if (u <= 0.0) return 1.0;
        if (u >= 1.0) return 0.0;
        const double a = bump_half(1.0 - u);
        const double b = bump_half(u);
        return a / (a + b);
    };
    const auto step_deriv = [](double u) {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        const double a = bump_half(1.0 - u);
        const double b = bump_half(u);
        const double denom = (a + b) * (a + b);
        return -a * b * (1.0 / ((1.0 - u) * (1.0 - u)) + 1.0 / (u * u)) / denom;
    };
    TestFunction phi;
    phi.name = "plateau";
    phi.phi = [=](double x) { return step((std::abs(x) - radius) / width); };
    phi.dphi = [=](double x) {
        const double s = x < 0.0 ? -1.0 : 1.0;
        return s * step_deriv((std::abs(x) - radius) / width) / width;
    };
    phi.profile.knots = {-radius - width, -radius, radius, radius + width};
    return phi;
}

std::vector<double> weak_ic_check(const LprimeElement& f, const TestFunction& phi, const std::vector<double>& ts,
                                  const QuadratureConfig& cfg) {
    std::vector<double> out(ts.size(), 0.0);
    const auto& F = f.primitive();
    if (F.is_zero()) return out;
    parallel_for(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto integrand = [&](double x) {
            const double d = phi.dphi(x);
            if (d == 0.0) return 0.0;
            return (convolve_point(F, 0, t, x, cfg) - F(x)) * d;
        };
        const auto profile = LineProfile::product(difference_profile(F, t, cfg), phi.profile);
        out[i] = -integrate_over(integrand, profile, -Exponent::kInf, Exponent::kInf, TailSign::kSigned,
                                 outer_config(cfg))
                      .value;
    });
    return out;
}

EstimateReport continuity_bound(const LprimeElement& f, const LprimeElement& g, const ExponentTriple& tr, double t,
                                const QuadratureConfig& cfg, double tolerance) {
    if (!(f.p() == g.p()) || !(f.p() == tr.p())) {
        fail(ErrorKind::kPrecondition, "continuity bound needs f, g and the triple to share p");
    }
    const auto diff = f.primitive() - g.primitive();
    const double lhs = convolution_norm(diff, 0, t, tr.r(), cfg);
    const double rhs = K_const(tr) * lp_norm(diff, tr.p(), cfg) * std::pow(t, -theta_norm_time_exponent(tr.q()));
    return make_report("continuity", lhs, rhs, tolerance,
                       {{"p", tr.p().value()}, {"q", tr.q().value()}, {"r", tr.r().value()}, {"t", t}});
}

}  // namespace lpheat
