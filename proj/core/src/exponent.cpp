#include "lpheat/exponent.hpp"

#include <charconv>
#include <cmath>

#include "lpheat/error.hpp"
#include "lpheat/io.hpp"

namespace lpheat {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kDomain: return "domain error";
        case ErrorKind::kUnsupported: return "unsupported";
        case ErrorKind::kMembership: return "membership error";
        case ErrorKind::kAccuracy: return "accuracy error";
        case ErrorKind::kApproximation: return "approximation failure";
        case ErrorKind::kSearch: return "search failure";
        case ErrorKind::kPrecondition: return "precondition error";
        case ErrorKind::kNoValidExponent: return "no valid r";
        case ErrorKind::kResolution: return "resolution error";
    }
    return "error";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Exponent::Exponent(double value) : value_(value) {
    if (!(value >= 1.0)) {
        fail(ErrorKind::kDomain, "exponent out of range: " + format_real(value) + " (need [1, inf])");
    }
}

Exponent Exponent::from_reciprocal(double reciprocal) {
    if (reciprocal == 0.0) return infinity();
    return Exponent(1.0 / reciprocal);
}

Exponent Exponent::parse(std::string_view text) {
    return Exponent(parse_real(text));
}

std::string Exponent::to_string() const { return format_real(value_); }

Exponent conjugate(Exponent p) {
    if (p.is_one()) return Exponent::infinity();
    if (p.is_infinite()) return Exponent(1.0);
    return Exponent(p.value() / (p.value() - 1.0));
}

}  // namespace lpheat
