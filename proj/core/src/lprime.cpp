#include "lpheat/lprime.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"
#include "lpheat/parallel.hpp"

namespace lpheat {

namespace {

constexpr int kMinCells = 16;
constexpr int kMaxCells = 1 << 16;

// ||F chi_(x, inf)||_p.
double right_tail_norm(const PrimitiveFunction& f, const LineProfile& profile, Exponent p, double x,
                       const QuadratureConfig& cfg) {
    const double s = p.value();
    const auto powered = [&f, s](double y) { return std::pow(std::abs(f(y)), s); };
    const auto r = integrate_over(powered, profile.raised_to(s), x, Exponent::kInf, TailSign::kNonNegative, cfg);
    return std::pow(std::max(r.value, 0.0), 1.0 / s);
}

}  // namespace

LprimeElement::LprimeElement(PrimitiveFunction primitive, Exponent p) : primitive_(std::move(primitive)), p_(p) {
    if (!primitive_.admits(p)) fail(ErrorKind::kMembership, "primitive is not in L^" + p.to_string());
}

LprimeElement LprimeElement::from_atoms(std::vector<Atom> atoms, Exponent p) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.location < b.location; });
    double total = 0.0;
    double scale = 0.0;
    for (const auto& atom : atoms) {
        if (!std::isfinite(atom.weight) || !std::isfinite(atom.location)) {
            fail(ErrorKind::kDomain, "atom weights and locations must be finite");
        }
        total += atom.weight;
        scale += std::abs(atom.weight);
    }
    if (std::abs(total) > 1e-12 * std::max(scale, 1.0)) {
        fail(ErrorKind::kMembership, "atom weights sum to " + format_real(total) + "; the primitive is not in L^p");
    }
    std::vector<shape::Step> steps;
    double level = 0.0;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
        level += atoms[i].weight;
        if (level != 0.0 && atoms[i + 1].location > atoms[i].location) {
            steps.push_back({level, atoms[i].location, atoms[i + 1].location});
        }
    }
    LprimeElement out(PrimitiveFunction::step_combo(std::move(steps)), p);
    out.atoms_ = std::move(atoms);
    return out;
}

LprimeElement dirac_difference(double a, double b, Exponent p) {
    if (!(a < b)) fail(ErrorKind::kDomain, "dirac difference needs a < b");
    return LprimeElement::from_atoms({{1.0, a}, {-1.0, b}}, p);
}

double lprime_norm(const LprimeElement& f, const QuadratureConfig& cfg) {
    return lp_norm(f.primitive(), f.p(), cfg);
}

StepApproximation step_approximation(const LprimeElement& f, double epsilon, const QuadratureConfig& cfg) {
    if (!(epsilon > 0.0)) fail(ErrorKind::kDomain, "epsilon must be > 0");
    const auto& F = f.primitive();
    if (F.is_step_function()) return {f, 0.0, 0};

    const auto profile = F.profile(cfg.tail_width_sigmas);
    auto [lo, hi] = F.support(cfg.tail_width_sigmas);
    if (std::isinf(hi)) {
        if (f.p().is_infinite()) {
            fail(ErrorKind::kUnsupported, "step approximation in L^inf needs a bounded support");
        }
        hi = std::max(profile.knots.back(), lo + 1.0);
        while (right_tail_norm(F, profile, f.p(), hi, cfg) >= 0.25 * epsilon) {
            hi = lo + 2.0 * (hi - lo);
            if (hi > 1e12) throw ApproximationError("tail of the primitive is too heavy to truncate", Exponent::kInf);
        }
    }

    const auto eval = [&F](double x) { return F(x); };

    // Cumulative |F|^p mass on a reference grid mixing equal and geometric
    // spacing, used to place equal-mass cells where F is concentrated.
    std::vector<double> ref;
    std::vector<double> mass;
    if (!f.p().is_infinite()) {
        constexpr int kRef = 4096;
        const double span = hi - lo;
        const double ratio = std::pow(1e6, 1.0 / kRef);
        for (int i = 0; i <= kRef; ++i) {
            ref.push_back(lo + span * i / kRef);
            ref.push_back(lo + span * (std::pow(ratio, i) - 1.0) / (1e6 - 1.0));
        }
        std::sort(ref.begin(), ref.end());
        ref.erase(std::unique(ref.begin(), ref.end()), ref.end());
        const double s = f.p().value();
        const auto powered = [&F, s](double x) { return std::pow(std::abs(F(x)), s); };
        std::vector<double> cell(ref.size() - 1);
        parallel_for(cell.size(), [&](std::size_t i) { cell[i] = integrate(powered, ref[i], ref[i + 1], cfg).value; });
        mass.assign(ref.size(), 0.0);
        for (std::size_t i = 0; i < cell.size(); ++i) mass[i + 1] = mass[i] + cell[i];
    }

    double best_error = Exponent::kInf;
    for (int n = kMinCells; n <= kMaxCells; n *= 2) {
        // Equal-length cells plus equal-mass cells, refined at the profile
        // knots so that jumps of F fall on cell edges.
        std::vector<double> edges;
        edges.reserve(2 * static_cast<std::size_t>(n) + profile.knots.size() + 1);
        for (int i = 0; i <= n; ++i) edges.push_back(lo + (hi - lo) * i / n);
        if (!mass.empty() && mass.back() > 0.0) {
            std::size_t j = 0;
            for (int i = 1; i < n; ++i) {
                const double target = mass.back() * i / n;
                while (j + 2 < mass.size() && mass[j + 1] < target) ++j;
                const double dm = mass[j + 1] - mass[j];
                const double frac = dm > 0.0 ? std::clamp((target - mass[j]) / dm, 0.0, 1.0) : 0.0;
                edges.push_back(ref[j] + frac * (ref[j + 1] - ref[j]));
            }
        }
        for (double k : profile.knots) {
            if (k > lo && k < hi) edges.push_back(k);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        std::vector<double> means(edges.size() - 1);
        parallel_for(means.size(), [&](std::size_t i) {
            means[i] = integrate(eval, edges[i], edges[i + 1], cfg).value / (edges[i + 1] - edges[i]);
        });
        std::vector<shape::Step> steps;
        steps.reserve(means.size());
        for (std::size_t i = 0; i < means.size(); ++i) {
            if (means[i] != 0.0) steps.push_back({means[i], edges[i], edges[i + 1]});
        }
        auto G = PrimitiveFunction::step_combo(std::move(steps));
        const double error = lp_norm(F - G, f.p(), cfg);
        best_error = std::min(best_error, error);
        if (error < epsilon) return {LprimeElement(std::move(G), f.p()), error, n};
    }
    throw ApproximationError("step approximation did not reach epsilon " + format_real(epsilon) + " within " +
                                 std::to_string(kMaxCells) + " cells",
                             best_error);
}

double pairing(const LprimeElement& f, const PrimitiveFunction& g, Exponent q, const QuadratureConfig& cfg) {
    if (std::abs(f.p().reciprocal() + q.reciprocal() - 1.0) > 1e-12) {
        fail(ErrorKind::kDomain, "pairing needs conjugate exponents, got p = " + f.p().to_string() +
                                     " and q = " + q.to_string());
    }
    if (!g.admits(q)) fail(ErrorKind::kMembership, "density is not in L^" + q.to_string());
    const auto& F = f.primitive();
    if (F.is_zero() || g.is_zero()) return 0.0;
    const auto profile = LineProfile::product(F.profile(cfg.tail_width_sigmas), g.profile(cfg.tail_width_sigmas));
    const auto product = [&F, &g](double x) { return F(x) * g(x); };
    return -integrate_over(product, profile, -Exponent::kInf, Exponent::kInf, TailSign::kSigned, cfg).value;
}

double atom_pairing(const LprimeElement& f, const PrimitiveFunction& g, const QuadratureConfig& cfg) {
    if (!f.atoms()) fail(ErrorKind::kPrecondition, "element has no atoms");
    double sum = 0.0;
    for (const auto& atom : *f.atoms()) sum += atom.weight * antiderivative(g, atom.location, cfg);
    return sum;
}

}  // namespace lpheat
