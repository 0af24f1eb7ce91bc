#include "lpheat/lp_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"
#include "lpheat/kernel.hpp"

namespace lpheat {

using std::numbers::e;
using std::numbers::pi;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double gaussian_sigma(const shape::GaussianPower& g) { return std::sqrt(2.0 * g.t / g.beta); }

double shape_value(const Shape& s, double x) {
    return std::visit(
        Overloaded{
            [x](const shape::Indicator& v) { return (x >= v.a && x < v.b) ? 1.0 : 0.0; },
            [x](const shape::StepCombo& v) {
                double sum = 0.0;
                for (const auto& st : v.steps) {
                    if (x >= st.a && x < st.b) sum += st.height;
                }
                return sum;
            },
            [x](const shape::GaussianPower& v) {
                return std::exp(v.beta * (-x * x / (4.0 * v.t) - std::log(2.0 * std::sqrt(pi * v.t))));
            },
            [x](const shape::TailLog& v) {
                if (x < e) return 0.0;
                const double l = std::log(x);
                return std::pow(x, -1.0 / v.p) / (l * l);
            },
            [x](const shape::TruncatedSine& v) { return x > 1.0 ? std::pow(x, -1.0 / v.p) * std::sin(x) : 0.0; },
            [x](const shape::Sampled& v) { return v.grid.interpolate(x); },
        },
        s);
}

// Exact sup |shape| (up to golden-section accuracy for the sine lobe).
double shape_sup(const Shape& s) {
    return std::visit(
        Overloaded{
            [](const shape::Indicator&) { return 1.0; },
            [](const shape::StepCombo& v) {
                std::vector<double> cuts;
                for (const auto& st : v.steps) {
                    cuts.push_back(st.a);
                    cuts.push_back(st.b);
                }
                std::sort(cuts.begin(), cuts.end());
                double best = 0.0;
                const Shape whole = v;
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                    if (cuts[i + 1] > cuts[i]) {
                        best = std::max(best, std::abs(shape_value(whole, 0.5 * (cuts[i] + cuts[i + 1]))));
                    }
                }
                return best;
            },
            [](const shape::GaussianPower& v) { return std::pow(1.0 / (2.0 * std::sqrt(pi * v.t)), v.beta); },
            [](const shape::TailLog& v) { return std::exp(-1.0 / v.p); },
            [](const shape::TruncatedSine& v) {
                // The first lobe dominates; its maximum solves tan x = p x.
                const auto best = golden_maximize(
                    [&v](double x) { return std::pow(x, -1.0 / v.p) * std::sin(x); }, 1.0, pi, 1e-12);
                return std::max(best.value, std::sin(1.0));
            },
            [](const shape::Sampled& v) {
                double best = 0.0;
                for (double y : v.grid.values()) best = std::max(best, std::abs(y));
                return best;
            },
        },
        s);
}

struct ShapeExtent {
    double lo, hi;
};

ShapeExtent shape_extent(const Shape& s, double width) {
    constexpr double kInf = Exponent::kInf;
    return std::visit(
        Overloaded{
            [](const shape::Indicator& v) { return ShapeExtent{v.a, v.b}; },
            [](const shape::StepCombo& v) {
                ShapeExtent ext{kInf, -kInf};
                for (const auto& st : v.steps) {
                    ext.lo = std::min(ext.lo, st.a);
                    ext.hi = std::max(ext.hi, st.b);
                }
                return ext;
            },
            [width](const shape::GaussianPower& v) {
                const double w = width * gaussian_sigma(v);
                return ShapeExtent{-w, w};
            },
            [](const shape::TailLog&) { return ShapeExtent{e, kInf}; },
            [](const shape::TruncatedSine&) { return ShapeExtent{1.0, kInf}; },
            [](const shape::Sampled& v) { return ShapeExtent{v.grid.x0(), v.grid.x_end()}; },
        },
        s);
}

LineProfile shape_profile(const Shape& s, double shift, double width) {
    LineProfile p;
    std::visit(Overloaded{
                   [&](const shape::Indicator& v) { p.knots = {v.a + shift, v.b + shift}; },
                   [&](const shape::StepCombo& v) {
                       for (const auto& st : v.steps) {
                           p.knots.push_back(st.a + shift);
                           p.knots.push_back(st.b + shift);
                       }
                   },
                   [&](const shape::GaussianPower& v) {
                       const double sigma = gaussian_sigma(v);
                       p.knots = {shift - width * sigma, shift - sigma, shift, shift + sigma, shift + width * sigma};
                   },
                   [&](const shape::TailLog& v) {
                       // The logarithmic map needs its anchor above 1.
                       p.knots = {e + shift, std::max(e + shift, e)};
                       p.tail = TailKind::kLogPower;
                       p.decay = 1.0 / v.p;
                   },
                   [&](const shape::TruncatedSine& v) {
                       p.knots = {1.0 + shift, pi + shift};
                       p.tail = TailKind::kOscillatory;
                       p.decay = 1.0 / v.p;
                       p.half_period = pi;
                   },
                   [&](const shape::Sampled& v) {
                       const auto& g = v.grid;
                       p.knots.reserve(g.size());
                       for (std::size_t i = 0; i < g.size(); ++i) p.knots.push_back(g.x(i) + shift);
                   },
               },
               s);
    std::sort(p.knots.begin(), p.knots.end());
    p.knots.erase(std::unique(p.knots.begin(), p.knots.end()), p.knots.end());
    return p;
}

void require_exponent(double p, const char* what) {
    if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorKind::kDomain, std::string(what) + " needs 1 <= p < inf");
}

// int_0^h |y0 + (y1 - y0) x / h|^s dx in closed form.
double linear_cell_power(double y0, double y1, double h, double s) {
    if ((y0 >= 0.0) != (y1 >= 0.0) && y0 != 0.0 && y1 != 0.0) {
        const double theta = y0 / (y0 - y1);
        return h * (theta * std::pow(std::abs(y0), s) + (1.0 - theta) * std::pow(std::abs(y1), s)) / (s + 1.0);
    }
    const double a = std::abs(y0);
    const double b = std::abs(y1);
    if (a == b) return h * std::pow(a, s);
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (lo == 0.0) return h * std::pow(hi, s) / (s + 1.0);
    // hi^(s+1) - lo^(s+1) without cancellation.
    const double diff = std::pow(lo, s + 1.0) * std::expm1((s + 1.0) * std::log1p((hi - lo) / lo));
    return h * diff / ((s + 1.0) * (hi - lo));
}

double sampled_lp_norm(const GridFunction& g, double coef, Exponent s) {
    const auto v = g.values();
    if (s.is_infinite()) {
        double best = 0.0;
        for (double y : v) best = std::max(best, std::abs(y));
        return std::abs(coef) * best;
    }
    // Zero outside the grid: the first and last nodes are joined to zero only
    // through the jump, so cells run strictly between nodes.
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += linear_cell_power(v[i], v[i + 1], g.dx(), s.value());
    return std::abs(coef) * std::pow(sum, 1.0 / s.value());
}

}  // namespace

LineProfile LineProfile::raised_to(double s) const {
    LineProfile p = *this;
    p.decay = decay * s;
    return p;
}

LineProfile LineProfile::merge(const LineProfile& a, const LineProfile& b) {
    LineProfile p;
    p.knots = a.knots;
    p.knots.insert(p.knots.end(), b.knots.begin(), b.knots.end());
    std::sort(p.knots.begin(), p.knots.end());
    p.knots.erase(std::unique(p.knots.begin(), p.knots.end()), p.knots.end());
    if (a.tail != TailKind::kNone && b.tail != TailKind::kNone) {
        if (a.tail != b.tail || (a.tail == TailKind::kOscillatory && a.half_period != b.half_period)) {
            fail(ErrorKind::kUnsupported, "cannot combine different tail behaviours in one function");
        }
        p.tail = a.tail;
        p.decay = std::min(a.decay, b.decay);
        p.half_period = a.half_period;
    } else if (a.tail != TailKind::kNone) {
        p.tail = a.tail;
        p.decay = a.decay;
        p.half_period = a.half_period;
    } else {
        p.tail = b.tail;
        p.decay = b.decay;
        p.half_period = b.half_period;
    }
    return p;
}

LineProfile LineProfile::product(const LineProfile& a, const LineProfile& b) {
    LineProfile p;
    p.knots = a.knots;
    p.knots.insert(p.knots.end(), b.knots.begin(), b.knots.end());
    std::sort(p.knots.begin(), p.knots.end());
    p.knots.erase(std::unique(p.knots.begin(), p.knots.end()), p.knots.end());
    if (a.tail != TailKind::kNone && b.tail != TailKind::kNone) {
        const bool oscillatory = a.tail == TailKind::kOscillatory || b.tail == TailKind::kOscillatory;
        p.tail = oscillatory ? TailKind::kOscillatory : TailKind::kLogPower;
        p.decay = a.decay + b.decay;
        p.half_period = std::max(a.half_period, b.half_period);
    }
    return p;
}

PrimitiveFunction PrimitiveFunction::indicator(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) fail(ErrorKind::kDomain, "indicator needs finite a < b");
    return PrimitiveFunction(Term{1.0, 0.0, shape::Indicator{a, b}});
}

PrimitiveFunction PrimitiveFunction::step_combo(std::vector<shape::Step> steps) {
    if (steps.empty()) return zero();
    for (const auto& st : steps) {
        if (!(st.a < st.b) || !std::isfinite(st.a) || !std::isfinite(st.b) || !std::isfinite(st.height)) {
            fail(ErrorKind::kDomain, "step needs finite height and finite a < b");
        }
    }
    return PrimitiveFunction(Term{1.0, 0.0, shape::StepCombo{std::move(steps)}});
}

PrimitiveFunction PrimitiveFunction::gaussian_power(double t, double beta) {
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::kDomain, "gaussian power needs t > 0");
    if (!(beta > 0.0) || !std::isfinite(beta)) fail(ErrorKind::kDomain, "gaussian power needs beta > 0");
    return PrimitiveFunction(Term{1.0, 0.0, shape::GaussianPower{t, beta}});
}

PrimitiveFunction PrimitiveFunction::tail_log(double p) {
    require_exponent(p, "tail_log");
    return PrimitiveFunction(Term{1.0, 0.0, shape::TailLog{p}});
}

PrimitiveFunction PrimitiveFunction::truncated_sine(double p) {
    require_exponent(p, "truncated_sine");
    return PrimitiveFunction(Term{1.0, 0.0, shape::TruncatedSine{p}});
}

PrimitiveFunction PrimitiveFunction::sampled(GridFunction grid) {
    return PrimitiveFunction(Term{1.0, 0.0, shape::Sampled{std::move(grid)}});
}

PrimitiveFunction PrimitiveFunction::from_terms(std::vector<Term> terms) {
    PrimitiveFunction out;
    for (auto& term : terms) {
        if (term.coef != 0.0) out.terms_.push_back(std::move(term));
    }
    return out;
}

double PrimitiveFunction::operator()(double x) const {
    double sum = 0.0;
    for (const auto& term : terms_) sum += term.coef * shape_value(term.shape, x - term.shift);
    return sum;
}

bool PrimitiveFunction::is_step_function() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return std::holds_alternative<shape::Indicator>(t.shape) || std::holds_alternative<shape::StepCombo>(t.shape);
    });
}

std::vector<shape::Step> PrimitiveFunction::steps() const {
    if (!is_step_function()) fail(ErrorKind::kPrecondition, "function is not a step function");
    std::vector<shape::Step> out;
    for (const auto& term : terms_) {
        if (const auto* ind = std::get_if<shape::Indicator>(&term.shape)) {
            out.push_back({term.coef, ind->a + term.shift, ind->b + term.shift});
        } else {
            for (const auto& st : std::get<shape::StepCombo>(term.shape).steps) {
                out.push_back({term.coef * st.height, st.a + term.shift, st.b + term.shift});
            }
        }
    }
    return out;
}

bool PrimitiveFunction::has_compact_support() const {
    return std::none_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return std::holds_alternative<shape::GaussianPower>(t.shape) || std::holds_alternative<shape::TailLog>(t.shape) ||
               std::holds_alternative<shape::TruncatedSine>(t.shape);
    });
}

std::pair<double, double> PrimitiveFunction::support(double tail_width_sigmas) const {
    if (terms_.empty()) return {0.0, 0.0};
    double lo = Exponent::kInf;
    double hi = -Exponent::kInf;
    for (const auto& term : terms_) {
        const auto ext = shape_extent(term.shape, tail_width_sigmas);
        lo = std::min(lo, ext.lo + term.shift);
        hi = std::max(hi, ext.hi + term.shift);
    }
    return {lo, hi};
}

double PrimitiveFunction::sup_bound() const {
    if (is_step_function() && !terms_.empty()) {
        // Exact: evaluate every piece of the combined step function.
        const auto all = steps();
        return shape_sup(shape::StepCombo{all});
    }
    double sum = 0.0;
    for (const auto& term : terms_) sum += std::abs(term.coef) * shape_sup(term.shape);
    return sum;
}

bool PrimitiveFunction::admits(Exponent s) const {
    for (const auto& term : terms_) {
        if (const auto* tl = std::get_if<shape::TailLog>(&term.shape)) {
            if (s.value() < tl->p) return false;
        } else if (const auto* ts = std::get_if<shape::TruncatedSine>(&term.shape)) {
            if (!(s.value() > ts->p)) return false;
        }
    }
    return true;
}

LineProfile PrimitiveFunction::profile(double tail_width_sigmas) const {
    LineProfile p;
    for (const auto& term : terms_) p = LineProfile::merge(p, shape_profile(term.shape, term.shift, tail_width_sigmas));
    return p;
}

PrimitiveFunction PrimitiveFunction::scaled(double c) const {
    if (!std::isfinite(c)) fail(ErrorKind::kDomain, "scale factor must be finite");
    if (c == 0.0) return zero();
    PrimitiveFunction out = *this;
    for (auto& term : out.terms_) term.coef *= c;
    return out;
}

PrimitiveFunction PrimitiveFunction::shifted(double h) const {
    if (!std::isfinite(h)) fail(ErrorKind::kDomain, "shift must be finite");
    PrimitiveFunction out = *this;
    for (auto& term : out.terms_) term.shift += h;
    return out;
}

PrimitiveFunction operator+(const PrimitiveFunction& a, const PrimitiveFunction& b) {
    PrimitiveFunction out = a;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

PrimitiveFunction operator-(const PrimitiveFunction& a, const PrimitiveFunction& b) { return a + b.scaled(-1.0); }

double evaluate(const PrimitiveFunction& f, double x) { return f(x); }

QuadResult integrate_over(const RealFunction& h, const LineProfile& profile, double a, double b, TailSign sign,
                          const QuadratureConfig& cfg) {
    if (a > b) {
        auto r = integrate_over(h, profile, b, a, sign, cfg);
        r.value = -r.value;
        return r;
    }
    if (a == b || profile.knots.empty()) return {};
    const bool extends = profile.tail != TailKind::kNone;
    const bool tail_needed = std::isinf(b) && extends;
    const double lo = std::isinf(a) ? profile.knots.front() : std::max(a, profile.knots.front());
    const double hi = std::isinf(b) ? profile.knots.back() : (extends ? b : std::min(b, profile.knots.back()));
    if (!tail_needed && !(hi > lo)) return {};

    std::vector<double> knots{lo};
    for (double k : profile.knots) {
        if (k > lo && k < hi) knots.push_back(k);
    }
    if (hi > lo) knots.push_back(hi);

    if (!tail_needed) return integrate(h, knots, cfg);
    const double start = std::max(lo, profile.knots.back());
    if (knots.back() < start) knots.push_back(start);
    if (profile.tail == TailKind::kLogPower) {
        if (sign == TailSign::kSigned && profile.decay < 1.0) {
            fail(ErrorKind::kMembership, "integrand tail decays like x^-" + format_real(profile.decay) +
                                             " and is not integrable");
        }
        return integrate_with_tail(h, knots, TailMap::kLogarithmic, cfg);
    }
    QuadResult r = integrate(h, knots, cfg);
    r += integrate_oscillatory_tail(h, start, profile.half_period, profile.decay, sign, cfg);
    return r;
}

double sup_abs_of(const RealFunction& h, const LineProfile& profile, double resolution) {
    if (profile.knots.empty()) return 0.0;
    if (!(resolution > 0.0)) fail(ErrorKind::kDomain, "scan resolution must be > 0");
    auto abs_h = [&h](double x) { return std::abs(h(x)); };
    double best = 0.0;
    auto scan = [&](double a, double b) {
        if (!(b > a)) {
            best = std::max(best, abs_h(a));
            return;
        }
        const double n = std::clamp(std::ceil((b - a) / resolution), 8.0, 200000.0);
        best = std::max(best, maximize(abs_h, a, b, static_cast<int>(n) + 1).value);
    };
    for (std::size_t i = 0; i + 1 < profile.knots.size(); ++i) scan(profile.knots[i], profile.knots[i + 1]);
    if (profile.knots.size() == 1) scan(profile.knots.front(), profile.knots.front());
    const double end = profile.knots.back();
    if (profile.tail == TailKind::kOscillatory) {
        scan(end, end + 8.0 * profile.half_period);
    } else if (profile.tail == TailKind::kLogPower) {
        scan(end, end + 16.0 * std::max(1.0, std::abs(end)));
    }
    return best;
}

double lp_norm_of(const RealFunction& h, const LineProfile& profile, Exponent p, double resolution,
                  const QuadratureConfig& cfg) {
    if (p.is_infinite()) return sup_abs_of(h, profile, resolution);
    const double s = p.value();
    const auto powered = [&h, s](double x) { return std::pow(std::abs(h(x)), s); };
    const auto r = integrate_over(powered, profile.raised_to(s), -Exponent::kInf, Exponent::kInf,
                                  TailSign::kNonNegative, cfg);
    return std::pow(std::max(r.value, 0.0), 1.0 / s);
}

double lp_norm(const PrimitiveFunction& f, Exponent p, const QuadratureConfig& cfg) {
    if (!f.admits(p)) fail(ErrorKind::kMembership, "function is not in L^" + p.to_string());
    if (f.is_zero()) return 0.0;
    const auto terms = f.terms();
    if (terms.size() == 1) {
        if (const auto* s = std::get_if<shape::Sampled>(&terms[0].shape)) return sampled_lp_norm(s->grid, terms[0].coef, p);
    }
    if (p.is_infinite()) {
        if (f.is_step_function() || terms.size() == 1) return f.sup_bound();
        const auto profile = f.profile(cfg.tail_width_sigmas);
        double resolution = 1.0;
        for (std::size_t i = 0; i + 1 < profile.knots.size(); ++i) {
            resolution = std::min(resolution, (profile.knots[i + 1] - profile.knots[i]) / 16.0);
        }
        return sup_abs_of([&f](double x) { return f(x); }, profile, std::max(resolution, 1e-6));
    }
    if (f.is_step_function()) {
        // Exact: sum of |value|^p times piece length.
        const auto st = f.steps();
        std::vector<double> cuts;
        for (const auto& s : st) {
            cuts.push_back(s.a);
            cuts.push_back(s.b);
        }
        std::sort(cuts.begin(), cuts.end());
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i + 1] > cuts[i]) {
                sum += (cuts[i + 1] - cuts[i]) * std::pow(std::abs(f(0.5 * (cuts[i] + cuts[i + 1]))), p.value());
            }
        }
        return std::pow(sum, 1.0 / p.value());
    }
    return lp_norm_of([&f](double x) { return f(x); }, f.profile(cfg.tail_width_sigmas), p, 1.0, cfg);
}

double antiderivative(const PrimitiveFunction& g, double x, const QuadratureConfig& cfg) {
    if (std::isnan(x)) fail(ErrorKind::kDomain, "antiderivative point must not be NaN");
    if (g.is_zero() || x == 0.0) return 0.0;
    if (x == Exponent::kInf) {
        for (const auto& term : g.terms()) {
            if (const auto* tl = std::get_if<shape::TailLog>(&term.shape); tl && tl->p > 1.0) {
                fail(ErrorKind::kMembership, "integral over the half line diverges");
            }
        }
    }
    const auto profile = g.profile(cfg.tail_width_sigmas);
    return integrate_over([&g](double y) { return g(y); }, profile, 0.0, x, TailSign::kSigned, cfg).value;
}

}  // namespace lpheat
