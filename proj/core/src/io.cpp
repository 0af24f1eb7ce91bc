#include "lpheat/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "lpheat/error.hpp"

namespace lpheat {

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) fail(ErrorKind::kDomain, "cannot format number");
    return std::string(buf.data(), end);
}

double parse_real(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    std::string_view body = text;
    double sign = 1.0;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? -1.0 : 1.0;
        body.remove_prefix(1);
    }
    if (body == "inf" || body == "infinity" || body == "Inf" || body == "Infinity") {
        return sign * std::numeric_limits<double>::infinity();
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size() || std::isnan(value)) {
        fail(ErrorKind::kDomain, "not a number: '" + std::string(text) + "'");
    }
    return sign * value;
}

}  // namespace lpheat
