#pragma once

namespace lpheat::special {

/// Gamma function by a Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy better than 1e-13 on (0.5, 10]; reflection is used below 0.5.
double gamma(double s);

}  // namespace lpheat::special
