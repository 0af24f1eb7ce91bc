#pragma once

#include <optional>
#include <vector>

#include "lpheat/exponent.hpp"
#include "lpheat/lp_space.hpp"

namespace lpheat {

struct Atom {
    double weight;
    double location;
};

/// f = F' with F in L^p.  The element is stored through its primitive; for
/// finite combinations of point masses the atoms are kept as well.
class LprimeElement {
public:
    /// Throws ErrorKind::kMembership when F is not in L^p.
    LprimeElement(PrimitiveFunction primitive, Exponent p);

    /// sum w_i delta_{x_i}.  The weights must sum to zero (otherwise the
    /// primitive is a nonzero constant at +inf); throws kMembership if not.
    static LprimeElement from_atoms(std::vector<Atom> atoms, Exponent p);

    const PrimitiveFunction& primitive() const noexcept { return primitive_; }
    Exponent p() const noexcept { return p_; }
    const std::optional<std::vector<Atom>>& atoms() const noexcept { return atoms_; }

private:
    PrimitiveFunction primitive_;
    Exponent p_;
    std::optional<std::vector<Atom>> atoms_;
};

/// delta_a - delta_b, whose primitive is chi_[a,b].  Throws kDomain unless a < b.
LprimeElement dirac_difference(double a, double b, Exponent p);

/// ||f||'_p = ||F||_p.
double lprime_norm(const LprimeElement& f, const QuadratureConfig& cfg);

struct StepApproximation {
    LprimeElement element;
    double error;  // ||F - G||_p, measured by quadrature
    int cells;     // equal-length cells on the truncated domain; 0 when f was already a step element
};

/// Element with a step primitive G and ||F - G||_p < epsilon.  G takes the
/// cell means of F on equal-length cells of a truncated domain; the cell
/// count doubles until the measured error drops below epsilon.  Throws
/// ApproximationError with the best error reached when 2^16 cells are not enough.
StepApproximation step_approximation(const LprimeElement& f, double epsilon, const QuadratureConfig& cfg);

/// <f, G> := -int F g for G(x) = int_0^x g, g in L^q.  Throws kDomain unless
/// 1/p + 1/q = 1.
double pairing(const LprimeElement& f, const PrimitiveFunction& g, Exponent q, const QuadratureConfig& cfg);

/// sum w_i G(x_i) for an element with atoms; kPrecondition otherwise.
double atom_pairing(const LprimeElement& f, const PrimitiveFunction& g, const QuadratureConfig& cfg);

}  // namespace lpheat
