#include "lpheat/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace lpheat::special {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

double gamma(double s) {
    using std::numbers::pi;
    if (s < 0.5) {
        return pi / (std::sin(pi * s) * gamma(1.0 - s));
    }
    const double z = s - 1.0;
    double series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
    }
    const double base = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(base, z + 0.5) * std::exp(-base) * series;
}

}  // namespace lpheat::special
