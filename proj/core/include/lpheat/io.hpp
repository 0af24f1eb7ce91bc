#pragma once

#include <string>
#include <string_view>

namespace lpheat {

/// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double value);

/// Parses a decimal number or "inf"/"infinity" (optionally signed).
/// Throws ErrorKind::kDomain on anything else, including trailing text.
double parse_real(std::string_view text);

}  // namespace lpheat
