#pragma once

#include <utility>

#include "lpheat/exponent.hpp"
#include "lpheat/grid.hpp"
#include "lpheat/lp_space.hpp"
#include "lpheat/quadrature.hpp"

namespace lpheat {

/// (F * Theta_t^(n))(x) = int F(x - y) Theta_t^(n)(y) dy.
///
/// Step terms (Indicator, StepCombo) use the exact antiderivative of the
/// kernel; every other term is integrated over |y| <= W, W =
/// tail_width_sigmas * sqrt(2t).  Throws AccuracyError when the quadrature
/// does not converge and kUnsupported for n > kMaxDerivativeOrder.
double convolve_point(const PrimitiveFunction& f, int n, double t, double x, const QuadratureConfig& cfg);

/// Same as convolve_point but integrates every term, step terms included.
double convolve_point_quadrature(const PrimitiveFunction& f, int n, double t, double x,
                                 const QuadratureConfig& cfg);

/// Discrete convolution of the samples with Theta_t^(n) sampled at the grid
/// spacing, via a zero-padded FFT; the result lives on the input nodes.
/// For n = 0 the sampled kernel is rescaled so that its Riemann sum is 1.
/// Throws ErrorKind::kResolution when dx > sqrt(t).
GridFunction convolve_grid(const GridFunction& f, double t, int n);

struct DerivativeCheck {
    double lhs;  // central difference of F * Theta^(n-1) with step h
    double rhs;  // F * Theta^(n)
};

DerivativeCheck convolve_smooth_derivative_check(const PrimitiveFunction& f, double t, int n, double x, double h,
                                                 const QuadratureConfig& cfg);

/// Integration layout of x -> (F * Theta_t^(n))(x): the profile of F with
/// every knot spread over the kernel width.  Each derivative adds one to the
/// decay of a power-law tail.
LineProfile convolution_profile(const PrimitiveFunction& f, double t, const QuadratureConfig& cfg, int n = 0);

/// ||F * Theta_t^(n)||_r by quadrature over the convolution profile.
double convolution_norm(const PrimitiveFunction& f, int n, double t, Exponent r, const QuadratureConfig& cfg);

}  // namespace lpheat
