#include "lpheat/convolve.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "lpheat/error.hpp"
#include "lpheat/kernel.hpp"

namespace lpheat {

namespace {

void check_order(int n) {
    if (n < 0) fail(ErrorKind::kDomain, "kernel derivative order must be >= 0");
    if (n > kMaxDerivativeOrder) fail(ErrorKind::kUnsupported, "kernel derivative order exceeds maximum");
}

void check_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::kDomain, "time must be finite and > 0");
}

// int_a^b Theta_t^(n)(x - z) dz.
double step_convolution(double a, double b, int n, double t, double x) {
    if (n == 0) {
        const double s = 2.0 * std::sqrt(t);
        const double u = (x - a) / s;
        const double v = (x - b) / s;
        if (v > 0.0) return 0.5 * (std::erfc(v) - std::erfc(u));
        if (u < 0.0) return 0.5 * (std::erfc(-u) - std::erfc(-v));
        return 0.5 * (std::erf(u) - std::erf(v));
    }
    return theta_deriv(KernelPoint(x - a, t), n - 1) - theta_deriv(KernelPoint(x - b, t), n - 1);
}

double quadrature_part(const PrimitiveFunction& f, int n, double t, double x, const QuadratureConfig& cfg) {
    if (f.is_zero()) return 0.0;
    const double sigma = std::sqrt(2.0 * t);
    const double width = cfg.tail_width_sigmas * sigma;
    const auto [lo, hi] = f.support(cfg.tail_width_sigmas);
    // y ranges over x - supp F intersected with the kernel window.
    const double y_lo = std::max(-width, x - hi);
    const double y_hi = std::min(width, x - lo);
    if (!(y_hi > y_lo)) return 0.0;

    std::vector<double> knots{y_lo, y_hi};
    for (double y : {-sigma, 0.0, sigma}) {
        if (y > y_lo && y < y_hi) knots.push_back(y);
    }
    const auto profile = f.profile(cfg.tail_width_sigmas);
    for (double k : profile.knots) {
        const double y = x - k;
        if (y > y_lo && y < y_hi) knots.push_back(y);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    const auto integrand = [&](double y) {
        const double value = f(x - y);
        if (value == 0.0) return 0.0;
        return value * theta_deriv(KernelPoint(y, t), n);
    };
    return integrate(integrand, knots, cfg).value;
}

struct FftwPlanDeleter {
    void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using PlanPtr = std::unique_ptr<fftw_plan_s, FftwPlanDeleter>;

// The FFTW planner is not reentrant; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

std::size_t fft_size(std::size_t minimum) {
    std::size_t n = 1;
    while (n < minimum) n *= 2;
    return n;
}

}  // namespace

double convolve_point(const PrimitiveFunction& f, int n, double t, double x, const QuadratureConfig& cfg) {
    check_order(n);
    check_time(t);
    if (!std::isfinite(x)) fail(ErrorKind::kDomain, "evaluation point must be finite");
    double sum = 0.0;
    std::vector<PrimitiveFunction::Term> rest;
    for (const auto& term : f.terms()) {
        if (const auto* ind = std::get_if<shape::Indicator>(&term.shape)) {
            sum += term.coef * step_convolution(ind->a + term.shift, ind->b + term.shift, n, t, x);
        } else if (const auto* combo = std::get_if<shape::StepCombo>(&term.shape)) {
            for (const auto& st : combo->steps) {
                sum += term.coef * st.height * step_convolution(st.a + term.shift, st.b + term.shift, n, t, x);
            }
        } else {
            rest.push_back(term);
        }
    }
    if (!rest.empty()) sum += quadrature_part(PrimitiveFunction::from_terms(std::move(rest)), n, t, x, cfg);
    return sum;
}

double convolve_point_quadrature(const PrimitiveFunction& f, int n, double t, double x,
                                 const QuadratureConfig& cfg) {
    check_order(n);
    check_time(t);
    if (!std::isfinite(x)) fail(ErrorKind::kDomain, "evaluation point must be finite");
    return quadrature_part(f, n, t, x, cfg);
}

GridFunction convolve_grid(const GridFunction& f, double t, int n) {
    check_order(n);
    check_time(t);
    const double dx = f.dx();
    if (dx > std::sqrt(t)) {
        fail(ErrorKind::kResolution, "grid spacing does not resolve the kernel (need dx <= sqrt(t))");
    }
    const std::size_t size = f.size();
    // Kernel offsets -(size-1)..(size-1) cover every node pair.
    const std::size_t kernel_len = 2 * size - 1;
    const std::size_t m = fft_size(std::max<std::size_t>(size + kernel_len - 1, 2 * size));
    const std::size_t spectrum = m / 2 + 1;

    std::vector<double> kernel(kernel_len);
    const auto half = static_cast<std::ptrdiff_t>(size) - 1;
    for (std::ptrdiff_t j = -half; j <= half; ++j) {
        kernel[static_cast<std::size_t>(j + half)] = theta_deriv(KernelPoint(static_cast<double>(j) * dx, t), n) * dx;
    }
    if (n == 0) {
        // Riemann sum of the kernel over its whole effective support.
        const auto reach = static_cast<std::ptrdiff_t>(std::ceil(40.0 * std::sqrt(t) / dx));
        double mass = 0.0;
        for (std::ptrdiff_t j = -reach; j <= reach; ++j) mass += theta(KernelPoint(static_cast<double>(j) * dx, t));
        mass *= dx;
        for (double& k : kernel) k /= mass;
    }

    std::unique_ptr<double, FftwFree> a(static_cast<double*>(fftw_malloc(sizeof(double) * m)));
    std::unique_ptr<double, FftwFree> b(static_cast<double*>(fftw_malloc(sizeof(double) * m)));
    std::unique_ptr<fftw_complex, FftwFree> fa(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * spectrum)));
    std::unique_ptr<fftw_complex, FftwFree> fb(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * spectrum)));
    if (!a || !b || !fa || !fb) throw std::bad_alloc();

    PlanPtr forward_a, forward_b, backward;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        const int len = static_cast<int>(m);
        forward_a.reset(fftw_plan_dft_r2c_1d(len, a.get(), fa.get(), FFTW_ESTIMATE));
        forward_b.reset(fftw_plan_dft_r2c_1d(len, b.get(), fb.get(), FFTW_ESTIMATE));
        backward.reset(fftw_plan_dft_c2r_1d(len, fa.get(), a.get(), FFTW_ESTIMATE));
    }
    std::fill(a.get(), a.get() + m, 0.0);
    std::fill(b.get(), b.get() + m, 0.0);
    std::copy(f.values().begin(), f.values().end(), a.get());
    std::copy(kernel.begin(), kernel.end(), b.get());
    fftw_execute(forward_a.get());
    fftw_execute(forward_b.get());
    for (std::size_t k = 0; k < spectrum; ++k) {
        const std::complex<double> u(fa.get()[k][0], fa.get()[k][1]);
        const std::complex<double> v(fb.get()[k][0], fb.get()[k][1]);
        const auto w = u * v;
        fa.get()[k][0] = w.real();
        fa.get()[k][1] = w.imag();
    }
    fftw_execute(backward.get());

    // Full linear convolution index i + j; node i sits at offset `half`.
    std::vector<double> out(size);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < size; ++i) out[i] = a.get()[i + static_cast<std::size_t>(half)] * scale;
    return GridFunction(f.x0(), dx, std::move(out));
}

DerivativeCheck convolve_smooth_derivative_check(const PrimitiveFunction& f, double t, int n, double x, double h,
                                                 const QuadratureConfig& cfg) {
    if (n < 1) fail(ErrorKind::kDomain, "derivative check needs n >= 1");
    if (!(h > 0.0)) fail(ErrorKind::kDomain, "finite-difference step must be > 0");
    const double up = convolve_point(f, n - 1, t, x + h, cfg);
    const double down = convolve_point(f, n - 1, t, x - h, cfg);
    return {(up - down) / (2.0 * h), convolve_point(f, n, t, x, cfg)};
}

LineProfile convolution_profile(const PrimitiveFunction& f, double t, const QuadratureConfig& cfg, int n) {
    check_time(t);
    LineProfile base = f.profile(cfg.tail_width_sigmas);
    if (base.knots.empty()) return base;
    const double sigma = std::sqrt(2.0 * t);
    const double width = cfg.tail_width_sigmas * sigma;
    LineProfile out = base;
    out.knots.clear();
    for (double k : base.knots) {
        for (double offset : {-width, -3.0 * sigma, -sigma, 0.0, sigma, 3.0 * sigma, width}) {
            out.knots.push_back(k + offset);
        }
    }
    std::sort(out.knots.begin(), out.knots.end());
    // The convolution is smooth on the kernel scale; dense knots (sampled data) are thinned.
    std::vector<double> thinned{out.knots.front()};
    for (std::size_t i = 1; i + 1 < out.knots.size(); ++i) {
        if (out.knots[i] - thinned.back() >= 0.5 * sigma) thinned.push_back(out.knots[i]);
    }
    if (out.knots.size() > 1) thinned.push_back(out.knots.back());
    out.knots = std::move(thinned);
    if (base.tail == TailKind::kLogPower) {
        out.decay += n;
        if (out.knots.back() <= 1.0) out.knots.push_back(std::numbers::e);
    }
    return out;
}

double convolution_norm(const PrimitiveFunction& f, int n, double t, Exponent r, const QuadratureConfig& cfg) {
    if (f.is_zero()) return 0.0;
    const auto profile = convolution_profile(f, t, cfg, n);
    const auto v = [&](double x) { return convolve_point(f, n, t, x, cfg); };
    // The outer integrand carries the inner quadrature error.
    QuadratureConfig outer = cfg;
    outer.rel_tol = cfg.rel_tol * 100.0;
    return lp_norm_of(v, profile, r, std::sqrt(2.0 * t) / 16.0, outer);
}

}  // namespace lpheat
