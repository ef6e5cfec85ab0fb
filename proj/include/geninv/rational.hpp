#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace geninv {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form this library
/// relies on everywhere: numerator/denominator coprime, denominator > 0, so
/// equality is structural.
using Rational = boost::multiprecision::cpp_rational;

/// Builds n/d with sign normalization (cpp_rational rejects d < 0 directly).
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline bool fits_int64(const Int& v) {
    static const Int lo = (std::numeric_limits<std::int64_t>::min)();
    static const Int hi = (std::numeric_limits<std::int64_t>::max)();
    return v >= lo && v <= hi;
}

inline std::string to_decimal_string(const Int& v) { return v.str(); }

inline Int int_from_decimal_string(const std::string& s) { return Int(s); }

} // namespace geninv
