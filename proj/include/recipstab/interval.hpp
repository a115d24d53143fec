#pragma once

#include "recipstab/funceq.hpp"
#include "recipstab/rational.hpp"

#include <functional>
#include <string>

namespace recipstab {

/// A closed rational bracket [lo, hi] guaranteed to contain the real
/// quantity it was computed for. All operations round outward (exact
/// rational endpoint arithmetic: no rounding is actually needed except in
/// root extraction, which widens).
struct RationalInterval {
    Rational lo;
    Rational hi;

    static RationalInterval point(Rational v);
    static RationalInterval make(Rational lo, Rational hi);  // validates lo <= hi

    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// Throws std::domain_error when b contains zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

/// a^e for integer e >= 0; for negative e the interval must exclude zero.
RationalInterval pow_interval(const RationalInterval& a, long long e);

/// Fold to an enclosure of the absolute value.
RationalInterval abs_interval(const RationalInterval& a);

/// An enclosure of value^(1/n) (value >= 0) with width at most 2^(-bits):
/// [r, r+1]/2^bits around the scaled integer root, collapsed to a point
/// when the root is exactly rational at this scale.
RationalInterval nth_root_enclosure(const Rational& value, unsigned n, unsigned bits);

/// A bracket for a real quantity carrying a verdict flag. When conclusive
/// is false because a denominator enclosure contained zero, the bracket is
/// vacuous (0/0) and must not be used; reason says what happened.
struct CertifiedInterval {
    Rational lower;
    Rational upper;
    bool conclusive;
    std::string reason;  // empty when conclusive
};

/// Verdict threshold: an enclosure is conclusive when its width is at most
/// 2^(-40) relative to max(magnitude, 1).
bool enclosure_is_tight(const RationalInterval& iv);

/// Enclosure of |difference operator| at (x, y) for a positive-valued
/// mapping f given by exact rational point values; the fractional powers
/// f^(j/root_index) are bracketed by certified root enclosures at the given
/// working precision. Inconclusive (vacuous bracket) when the bracket
/// denominator encloses zero; domain errors for x, y, 2x+y or 2x-y zero or
/// nonpositive f values.
CertifiedInterval delta_enclosure(const EquationTraits& traits,
                                  CoefficientPolicy policy,
                                  const std::function<Rational(const Rational&)>& f,
                                  const Rational& x, const Rational& y,
                                  unsigned precision_bits);

}  // namespace recipstab
