#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace lpheat {

/// An exponent in the extended range [1, inf].  Infinity is a first-class
/// value: reciprocal() of an infinite exponent is exactly 0.
class Exponent {
public:
    static constexpr double kInf = std::numeric_limits<double>::infinity();

    /// Throws ErrorKind::kDomain unless value >= 1 (NaN rejected).
    explicit Exponent(double value);

    static Exponent infinity() { return Exponent(kInf); }
    /// Exponent with the given reciprocal; 0 gives infinity.
    static Exponent from_reciprocal(double reciprocal);
    /// Accepts decimal numbers and "inf"/"infinity".
    static Exponent parse(std::string_view text);

    double value() const noexcept { return value_; }
    double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / value_; }
    bool is_infinite() const noexcept { return value_ == kInf; }
    bool is_one() const noexcept { return value_ == 1.0; }

    std::string to_string() const;

    friend bool operator==(Exponent a, Exponent b) noexcept { return a.value_ == b.value_; }

private:
    double value_;
};

/// The conjugate exponent p' with 1/p + 1/p' = 1.
Exponent conjugate(Exponent p);

}  // namespace lpheat
