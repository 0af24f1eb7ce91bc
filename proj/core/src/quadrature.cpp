#include "lpheat/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"

namespace lpheat {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) fail(ErrorKind::kDomain, "quadrature tolerances must be > 0");
    if (max_subdivisions < 1) fail(ErrorKind::kDomain, "max_subdivisions must be >= 1");
    if (!(tail_width_sigmas >= 6.0)) fail(ErrorKind::kDomain, "tail_width_sigmas must be >= 6");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208977211079, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kLogCut = 600.0;  // largest log(x) the logarithmic map evaluates

enum class Map { kIdentity, kRationalRight, kRationalLeft, kLogarithmic };

struct Piece {
    Map map = Map::kIdentity;
    double anchor = 0.0;  // a for right tails, b for left tails, log(a) for kLogarithmic
};

// Integrand pulled back to the w variable of its piece.
double pulled_back(const RealFunction& f, const Piece& piece, double w) {
    switch (piece.map) {
        case Map::kIdentity:
            return f(w);
        case Map::kRationalRight: {
            const double x = piece.anchor + (1.0 - w) / w;
            if (!std::isfinite(x)) return 0.0;
            return f(x) / (w * w);
        }
        case Map::kRationalLeft: {
            const double x = piece.anchor - (1.0 - w) / w;
            if (!std::isfinite(x)) return 0.0;
            return f(x) / (w * w);
        }
        case Map::kLogarithmic: {
            const double u = piece.anchor / w;
            if (u > kLogCut) return 0.0;
            const double x = std::exp(u);
            const double value = f(x);
            if (value == 0.0) return 0.0;
            return value * x * piece.anchor / (w * w);
        }
    }
    return 0.0;
}

struct Interval {
    double a, b;
    std::size_t piece;
    double value, error, resabs;
    bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gauss_kronrod(const RealFunction& f, const Piece& piece, std::size_t index, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    const double fc = pulled_back(f, piece, center);
    double resg = 0.0;
    double resk = kWgk[10] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        const double v1 = pulled_back(f, piece, center - dx);
        const double v2 = pulled_back(f, piece, center + dx);
        f1[jtw] = v1;
        f2[jtw] = v2;
        resg += kWg[j] * (v1 + v2);
        resk += kWgk[jtw] * (v1 + v2);
        resabs += kWgk[jtw] * (std::abs(v1) + std::abs(v2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        const double v1 = pulled_back(f, piece, center - dx);
        const double v2 = pulled_back(f, piece, center + dx);
        f1[jtwm1] = v1;
        f2[jtwm1] = v2;
        resk += kWgk[jtwm1] * (v1 + v2);
        resabs += kWgk[jtwm1] * (std::abs(v1) + std::abs(v2));
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
    }
    const double result = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double error = std::abs((resk - resg) * half);
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        error = std::max(50.0 * kEps * resabs, error);
    }
    return Interval{a, b, index, result, error, resabs};
}

struct Segment {
    Piece piece;
    double w0, w1;
};

QuadResult adaptive(const RealFunction& f, const std::vector<Segment>& segments, const QuadratureConfig& cfg) {
    cfg.validate();
    std::priority_queue<Interval> heap;
    std::vector<Piece> pieces;
    std::vector<Interval> frozen;
    long evaluations = 0;
    double total = 0.0;
    double total_error = 0.0;
    double total_resabs = 0.0;

    for (const auto& segment : segments) {
        if (segment.w1 == segment.w0) continue;
        pieces.push_back(segment.piece);
        const auto iv = gauss_kronrod(f, segment.piece, pieces.size() - 1, segment.w0, segment.w1);
        evaluations += 21;
        total += iv.value;
        total_error += iv.error;
        total_resabs += iv.resabs;
        heap.push(iv);
    }

    auto tolerance = [&] {
        return std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), 200.0 * kEps * total_resabs});
    };

    int subdivisions = 0;
    while (total_error > tolerance() && !heap.empty()) {
        if (subdivisions >= cfg.max_subdivisions) {
            throw AccuracyError("quadrature did not converge within " + std::to_string(cfg.max_subdivisions) +
                                    " subdivisions (error estimate " + format_real(total_error) + ")",
                                total, total_error);
        }
        const Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
        if (std::abs(worst.b - worst.a) <= 100.0 * kEps * scale || mid == worst.a || mid == worst.b) {
            frozen.push_back(worst);
            continue;
        }
        const auto left = gauss_kronrod(f, pieces[worst.piece], worst.piece, worst.a, mid);
        const auto right = gauss_kronrod(f, pieces[worst.piece], worst.piece, mid, worst.b);
        evaluations += 42;
        ++subdivisions;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        total_resabs += left.resabs + right.resabs - worst.resabs;
        heap.push(left);
        heap.push(right);

        if (subdivisions % 64 == 0) {
            // Re-sum to keep the running totals free of drift.
            double sum = 0.0, err = 0.0, resabs = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                sum += copy.top().value;
                err += copy.top().error;
                resabs += copy.top().resabs;
                copy.pop();
            }
            for (const auto& iv : frozen) {
                sum += iv.value;
                err += iv.error;
                resabs += iv.resabs;
            }
            total = sum;
            total_error = err;
            total_resabs = resabs;
        }
    }
    if (total_error > tolerance()) {
        throw AccuracyError("quadrature hit the resolution limit (error estimate " + format_real(total_error) + ")",
                            total, total_error);
    }
    return QuadResult{total, total_error, evaluations};
}

std::vector<Segment> finite_segments(std::span<const double> knots) {
    std::vector<Segment> segments;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i + 1] < knots[i]) fail(ErrorKind::kDomain, "quadrature knots must be sorted");
        if (knots[i + 1] > knots[i]) segments.push_back({Piece{Map::kIdentity, 0.0}, knots[i], knots[i + 1]});
    }
    return segments;
}

Segment right_tail(double a, TailMap map) {
    if (map == TailMap::kLogarithmic) {
        if (!(a > 1.0)) fail(ErrorKind::kDomain, "logarithmic tail map needs a start point > 1");
        return {Piece{Map::kLogarithmic, std::log(a)}, 0.0, 1.0};
    }
    return {Piece{Map::kRationalRight, a}, 0.0, 1.0};
}

// Wynn's epsilon algorithm; returns the best estimate and the difference of
// the last two even-column entries as an error proxy.
std::pair<double, double> wynn_epsilon(const std::vector<double>& sums) {
    const std::size_t n = sums.size();
    if (n < 3) return {sums.back(), std::abs(sums.back() - (n > 1 ? sums[n - 2] : 0.0))};
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur(sums.begin(), sums.end());
    double best = sums.back();
    double best_err = std::abs(sums[n - 1] - sums[n - 2]);
    std::vector<double> even_tail;  // last entry of each even column
    even_tail.push_back(sums.back());
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double diff = cur[i + 1] - cur[i];
            const double base = (k == 1) ? 0.0 : prev[i + 1];
            if (diff == 0.0) {
                next[i] = std::numeric_limits<double>::infinity();
            } else {
                next[i] = base + 1.0 / diff;
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0 && !cur.empty()) {
            if (!std::isfinite(cur.back())) break;
            even_tail.push_back(cur.back());
        }
        if (cur.size() < 2) break;
    }
    if (even_tail.size() >= 2) {
        best = even_tail.back();
        best_err = std::abs(even_tail.back() - even_tail[even_tail.size() - 2]);
    }
    return {best, best_err};
}

}  // namespace

QuadResult integrate(const RealFunction& f, std::span<const double> knots, const QuadratureConfig& cfg) {
    if (knots.size() < 2) return {};
    return adaptive(f, finite_segments(knots), cfg);
}

QuadResult integrate(const RealFunction& f, double a, double b, const QuadratureConfig& cfg) {
    if (a == b) return {};
    if (a > b) {
        auto r = integrate(f, b, a, cfg);
        r.value = -r.value;
        return r;
    }
    std::vector<Segment> segments;
    const bool left_inf = std::isinf(a);
    const bool right_inf = std::isinf(b);
    if (left_inf && right_inf) {
        segments.push_back({Piece{Map::kRationalLeft, 0.0}, 0.0, 1.0});
        segments.push_back({Piece{Map::kRationalRight, 0.0}, 0.0, 1.0});
    } else if (left_inf) {
        segments.push_back({Piece{Map::kRationalLeft, b}, 0.0, 1.0});
    } else if (right_inf) {
        segments.push_back(right_tail(a, TailMap::kRational));
    } else {
        segments.push_back({Piece{Map::kIdentity, 0.0}, a, b});
    }
    return adaptive(f, segments, cfg);
}

QuadResult integrate_with_tail(const RealFunction& f, std::span<const double> knots, TailMap map,
                               const QuadratureConfig& cfg) {
    if (knots.empty()) fail(ErrorKind::kDomain, "integrate_with_tail needs at least one knot");
    auto segments = finite_segments(knots);
    segments.push_back(right_tail(knots.back(), map));
    if (map != TailMap::kLogarithmic) return adaptive(f, segments, cfg);
    const double u0 = segments.back().piece.anchor;
    if (u0 >= kLogCut) {
        segments.pop_back();
        return adaptive(f, segments, cfg);
    }
    segments.back().w0 = u0 / kLogCut;
    QuadResult r = adaptive(f, segments, cfg);
    // Beyond x = e^kLogCut, fit g(u) = f(e^u) e^u ~ C u^-k and add its exact tail.
    const double u1 = 0.5 * (u0 + kLogCut);
    const double g1 = f(std::exp(u1)) * std::exp(u1);
    const double g2 = f(std::exp(kLogCut)) * std::exp(kLogCut);
    if (g2 == 0.0 || !std::isfinite(g2)) return r;
    if (std::abs(g2) * kLogCut <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value))) return r;
    const double k = std::log(std::abs(g1 / g2)) / std::log(kLogCut / u1);
    if (!(k > 1.0)) throw AccuracyError("logarithmic tail is not integrable", r.value, std::abs(g2) * kLogCut);
    const double tail = g2 * kLogCut / (k - 1.0);
    r.value += tail;
    r.evaluations += 2;
    return r;
}

QuadResult integrate_oscillatory_tail(const RealFunction& f, double a, double half_period, double decay,
                                      TailSign sign, const QuadratureConfig& cfg) {
    if (!(half_period > 0.0)) fail(ErrorKind::kDomain, "oscillation half period must be > 0");
    QuadratureConfig piece_cfg = cfg;
    piece_cfg.abs_tol = cfg.abs_tol * 1e-2;

    if (sign == TailSign::kSigned) {
        std::vector<double> sums;
        QuadResult acc;
        double previous_estimate = std::numeric_limits<double>::quiet_NaN();
        constexpr int kMaxPieces = 200;
        for (int k = 0; k < kMaxPieces; ++k) {
            const double x0 = a + k * half_period;
            acc += integrate(f, x0, x0 + half_period, piece_cfg);
            sums.push_back(acc.value);
            if (k >= 12 && k % 2 == 0) {
                const auto [estimate, err] = wynn_epsilon(sums);
                const double change = std::abs(estimate - previous_estimate);
                const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate));
                if (std::isfinite(change) && std::max(change, err) <= tol) {
                    return QuadResult{estimate, std::max(change, acc.abs_error), acc.evaluations};
                }
                previous_estimate = estimate;
            }
        }
        const auto [estimate, err] = wynn_epsilon(sums);
        const double change = std::abs(estimate - previous_estimate);
        // Acceptance floor for the accelerated series.
        if (change <= std::max(1e3 * cfg.abs_tol, 1e-9 * std::abs(estimate))) {
            return QuadResult{estimate, change, acc.evaluations};
        }
        throw AccuracyError("oscillatory tail did not converge", estimate, std::max(change, err));
    }

    if (!(decay > 1.0)) {
        fail(ErrorKind::kMembership, "oscillatory tail with envelope x^-" + format_real(decay) + " is not integrable");
    }
    const double period = 2.0 * half_period;
    std::vector<double> pieces;
    QuadResult acc;
    auto estimate_with = [&](std::size_t n) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += pieces[k];
        const double x_end = a + static_cast<double>(n) * period;
        const double x_last = x_end - period;
        // Envelope amplitude fitted on the last whole period.
        const double envelope_last = (std::pow(x_last, 1.0 - decay) - std::pow(x_end, 1.0 - decay)) / (decay - 1.0);
        const double amplitude = pieces[n - 1] / envelope_last;
        return sum + amplitude * std::pow(x_end, 1.0 - decay) / (decay - 1.0);
    };
    const double richardson = std::pow(2.0, decay);
    double previous_extrapolated = std::numeric_limits<double>::quiet_NaN();
    double previous_raw = std::numeric_limits<double>::quiet_NaN();
    constexpr std::size_t kMaxPeriods = 1u << 14;
    for (std::size_t n = 32; n <= kMaxPeriods; n *= 2) {
        while (pieces.size() < n) {
            const double x0 = a + static_cast<double>(pieces.size()) * period;
            const auto r = integrate(f, x0, x0 + period, piece_cfg);
            acc.abs_error += r.abs_error;
            acc.evaluations += r.evaluations;
            pieces.push_back(r.value);
        }
        const double raw = estimate_with(n);
        if (std::isfinite(previous_raw)) {
            const double extrapolated = (richardson * raw - previous_raw) / (richardson - 1.0);
            if (std::isfinite(previous_extrapolated)) {
                const double change = std::abs(extrapolated - previous_extrapolated);
                const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(extrapolated));
                if (change <= tol) return QuadResult{extrapolated, change + acc.abs_error, acc.evaluations};
                if (n == kMaxPeriods && change <= std::max(1e3 * cfg.abs_tol, 1e-9 * std::abs(extrapolated))) {
                    return QuadResult{extrapolated, change + acc.abs_error, acc.evaluations};
                }
            }
            previous_extrapolated = extrapolated;
        }
        previous_raw = raw;
    }
    throw AccuracyError("non-negative oscillatory tail did not converge", previous_extrapolated,
                        std::abs(previous_extrapolated - previous_raw));
}

Extremum golden_maximize(const RealFunction& f, double a, double b, double x_tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (std::abs(b - a) > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? Extremum{c, fc} : Extremum{d, fd};
}

Extremum maximize(const RealFunction& f, double a, double b, int samples) {
    if (samples < 2) samples = 2;
    const double step = (b - a) / (samples - 1);
    Extremum best{a, f(a)};
    int best_index = 0;
    for (int i = 1; i < samples; ++i) {
        const double x = (i == samples - 1) ? b : a + i * step;
        const double v = f(x);
        if (v > best.value) {
            best = {x, v};
            best_index = i;
        }
    }
    const double lo = std::max(a, a + (best_index - 1) * step);
    const double hi = std::min(b, a + (best_index + 1) * step);
    const auto refined = golden_maximize(f, lo, hi, 1e-12 * std::max(1.0, std::abs(best.x)));
    return refined.value > best.value ? refined : best;
}

}  // namespace lpheat
