#pragma once

#include <string>
#include <string_view>

#include "lpheat/lprime.hpp"

namespace lpheat {

/// PrimitiveFunction JSON:
///   {"type": "indicator", "a": .., "b": ..}
///   {"type": "step_combo", "steps": [[height, a, b], ...]}
///   {"type": "gaussian_power", "t": .., "beta": ..}
///   {"type": "tail_log", "p": ..}
///   {"type": "truncated_sine", "p": ..}
///   {"type": "samples", "x0": .., "dx": .., "values": [..]}
///   {"type": "sum", "terms": [<PrimitiveFunction>, ...]}
/// Any object may carry "coef" (default 1) and "shift" (default 0).
/// Throws ErrorKind::kDomain on malformed input.
PrimitiveFunction parse_primitive(std::string_view json_text);
std::string primitive_to_json(const PrimitiveFunction& f);

/// {"primitive": <PrimitiveFunction>, "p": number | "inf", "atoms": [[weight, x], ...]}.
/// Either "primitive" or "atoms" must be present; with atoms the primitive
/// is derived from them.
LprimeElement parse_element(std::string_view json_text);
std::string element_to_json(const LprimeElement& f);

}  // namespace lpheat
