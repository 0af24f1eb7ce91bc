#include "lpheat/grid.hpp"

#include <cmath>
#include <string>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"

namespace lpheat {

GridFunction::GridFunction(double x0, double dx, std::vector<double> values)
    : x0_(x0), dx_(dx), values_(std::move(values)) {
    if (!std::isfinite(x0) || !(dx > 0.0) || !std::isfinite(dx)) {
        fail(ErrorKind::kDomain, "grid needs finite x0 and dx > 0");
    }
    if (values_.size() < 2) fail(ErrorKind::kDomain, "grid needs at least two samples");
    for (double v : values_) {
        if (!std::isfinite(v)) fail(ErrorKind::kDomain, "grid samples must be finite");
    }
}

double GridFunction::interpolate(double x) const noexcept {
    const double s = (x - x0_) / dx_;
    const double last = static_cast<double>(values_.size() - 1);
    if (!(s >= 0.0) || s > last) return 0.0;
    auto i = static_cast<std::size_t>(std::floor(s));
    if (i >= values_.size() - 1) i = values_.size() - 2;
    const double frac = s - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

GridSpec GridSpec::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) fail(ErrorKind::kDomain, "grid must look like a:b:n");
    GridSpec spec;
    spec.lo = parse_real(text.substr(0, first));
    spec.hi = parse_real(text.substr(first + 1, second - first - 1));
    const double n = parse_real(text.substr(second + 1));
    if (n != std::floor(n) || n < 2 || n > 1e7) fail(ErrorKind::kDomain, "grid point count must be an integer >= 2");
    spec.count = static_cast<int>(n);
    if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || !(spec.hi > spec.lo)) {
        fail(ErrorKind::kDomain, "grid bounds must be finite with a < b");
    }
    return spec;
}

}  // namespace lpheat
