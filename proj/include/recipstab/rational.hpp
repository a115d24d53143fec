#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recipstab {

// The universal scalar: arbitrary-precision rationals kept in lowest terms
// with a positive denominator (cpp_rational maintains both on every
// operation). All verification arithmetic runs on these; doubles never
// touch a verdict.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Floor of a rational as an integer (rounds toward -infinity).
Integer floor_rational(const Rational& q);

/// Ceiling of a rational as an integer (rounds toward +infinity).
Integer ceil_rational(const Rational& q);

/// base^e for integer e; negative e inverts (base must be nonzero then).
Rational pow_int(const Rational& base, long long e);

Integer pow_uint(const Integer& base, unsigned long long e);

/// Largest r >= 0 with r^n <= m. Requires m >= 0, n >= 1.
Integer iroot_floor(const Integer& m, unsigned n);

/// Thrown when an exact rational power does not exist (e.g. 3^(1/2)).
class InexactPowerError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// base^e with rational exponent, succeeding only when the result is an
/// exact rational: the reduced exponent's root index must divide base
/// exactly (perfect-power test on numerator and denominator).
/// base > 0 unless the exponent is an integer.
Rational exact_pow(const Rational& base, const Rational& exponent);

/// Parse "n", "n/d" or "-n/d" (arbitrary precision). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical serialization "numerator/denominator", always with the
/// denominator (so "5" emits as "5/1"). parse_rational round-trips it.
std::string format_rational(const Rational& q);

}  // namespace recipstab
