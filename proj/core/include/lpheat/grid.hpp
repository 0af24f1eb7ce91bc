#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace lpheat {

/// Samples of a real function on a uniform grid x_i = x0 + i dx.
class GridFunction {
public:
    /// Requires dx > 0, at least two values, all finite (ErrorKind::kDomain otherwise).
    GridFunction(double x0, double dx, std::vector<double> values);

    /// Samples f at `count` uniformly spaced nodes covering [lo, hi].
    template <typename F>
    static GridFunction sample(F&& f, double lo, double hi, int count) {
        std::vector<double> values(static_cast<std::size_t>(count));
        const double dx = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = f(lo + i * dx);
        return GridFunction(lo, dx, std::move(values));
    }

    double x0() const noexcept { return x0_; }
    double dx() const noexcept { return dx_; }
    std::size_t size() const noexcept { return values_.size(); }
    double x(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * dx_; }
    double x_end() const noexcept { return x(values_.size() - 1); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Linear interpolation inside [x0, x_end], zero outside.
    double interpolate(double x) const noexcept;

private:
    double x0_;
    double dx_;
    std::vector<double> values_;
};

/// "a:b:n" grid description used by the CLI.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;

    /// Throws ErrorKind::kDomain on malformed text, n < 2 or b <= a.
    static GridSpec parse(std::string_view text);
    double node(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

}  // namespace lpheat
