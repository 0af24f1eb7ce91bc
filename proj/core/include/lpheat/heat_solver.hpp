#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "lpheat/constants.hpp"
#include "lpheat/grid.hpp"
#include "lpheat/lp_space.hpp"
#include "lpheat/lprime.hpp"
#include "lpheat/report.hpp"

namespace lpheat {

/// v_t(x) = (f * Theta_t)(x) = (F * Theta_t')(x).  Elements with atoms use
/// sum w_i Theta_t(x - x_i) directly.
double solve_at(const LprimeElement& f, double t, double x, const QuadratureConfig& cfg);

/// (F * Theta_t)(x), the primitive of v_t.
double solve_primitive_at(const LprimeElement& f, double t, double x, const QuadratureConfig& cfg);

/// v_t sampled on a grid.
struct Solution {
    double t;
    GridFunction values;
};

/// Evaluates v_t at every node of `grid`, in parallel across nodes.
Solution solve_on_grid(const LprimeElement& f, double t, const GridSpec& grid, const QuadratureConfig& cfg);

/// D_xx v - D_t v with central stencils of widths h_x and h_t.
/// Throws kPrecondition unless t - h_t > 0.
double pde_residual(const LprimeElement& f, double x, double t, double h_x, double h_t,
                    const QuadratureConfig& cfg);

/// Geometric sequence 1, 1/2, ..., 2^-14.
std::vector<double> default_time_sequence();

/// ||v_t - f||'_p = ||F * Theta_t - F||_p for each t.
std::vector<double> ic_convergence(const LprimeElement& f, const std::vector<double>& ts,
                                   const QuadratureConfig& cfg);

/// ||v_t||'_p = ||F * Theta_t||_p for each t.
std::vector<double> norm_limit_check(const LprimeElement& f, const std::vector<double>& ts,
                                     const QuadratureConfig& cfg);

/// Smooth, rapidly decaying phi with its derivative.
struct TestFunction {
    std::string name;
    RealFunction phi;
    RealFunction dphi;
    LineProfile profile;  // layout of phi and dphi
};

/// exp(-x^2 / (2 w^2)).
TestFunction gaussian_test(double width = 1.0 / std::numbers::sqrt2);
/// 1 on [-R, R], falling smoothly to 0 on R <= |x| <= R + w; dphi vanishes on (-R, R).
TestFunction plateau_test(double radius, double width);

/// <v_t - f, phi> = -int (F * Theta_t - F) phi' for each t.
std::vector<double> weak_ic_check(const LprimeElement& f, const TestFunction& phi, const std::vector<double>& ts,
                                  const QuadratureConfig& cfg);

/// ||(F - G) * Theta_t||_r against K_{p,q} ||f - g||'_p t^-((1-1/q)/2).
/// Throws kPrecondition when f, g or the triple disagree on p.
EstimateReport continuity_bound(const LprimeElement& f, const LprimeElement& g, const ExponentTriple& tr, double t,
                                const QuadratureConfig& cfg, double tolerance = 1e-6);

}  // namespace lpheat
