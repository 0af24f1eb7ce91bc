#include "lpheat/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "lpheat/kernel.hpp"

namespace lpheat {

std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> out;
    out.push_back({"dirac_difference_0_1_p2", dirac_difference(0.0, 1.0, Exponent(2.0)), true, 1.0});
    out.push_back({"dirac_difference_m1_1_p1", dirac_difference(-1.0, 1.0, Exponent(1.0)), true, 1.0});
    out.push_back({"indicator_m1_1_p1", LprimeElement(PrimitiveFunction::indicator(-1.0, 1.0), Exponent(1.0)), true,
                   1.0});
    out.push_back({"step_combo_p1.5",
                   LprimeElement(PrimitiveFunction::step_combo({{1.0, -1.0, 0.0}, {-0.5, 0.0, 2.0}}), Exponent(1.5)),
                   true, 2.0});
    out.push_back({"gaussian_p1", LprimeElement(PrimitiveFunction::gaussian_power(1.0, 1.0), Exponent(1.0)), false,
                   0.0});
    out.push_back({"gaussian_p2", LprimeElement(PrimitiveFunction::gaussian_power(1.0, 1.0), Exponent(2.0)), false,
                   0.0});
    out.push_back({"tail_log_p2", LprimeElement(PrimitiveFunction::tail_log(2.0), Exponent(2.0)), false, 0.0});
    out.push_back(
        {"truncated_sine_1_p2", LprimeElement(PrimitiveFunction::truncated_sine(1.0), Exponent(2.0)), false, 0.0});
    // Hat function 1 - |x| on [-1, 1], sampled.
    auto hat = GridFunction::sample([](double x) { return std::max(0.0, 1.0 - std::abs(x)); }, -1.0, 1.0, 201);
    out.push_back({"sampled_hat_p2", LprimeElement(PrimitiveFunction::sampled(std::move(hat)), Exponent(2.0)), true,
                   1.0});
    return out;
}

}  // namespace lpheat
