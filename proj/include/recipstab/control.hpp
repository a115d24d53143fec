#pragma once

#include "recipstab/rational.hpp"
#include "recipstab/valuation.hpp"

#include <string>

namespace recipstab {

/// The standard comparison families used to bound how far a mapping is
/// from satisfying an equation: zeta(x, y) dominates the norm of the
/// difference operator at (x, y).
enum class ControlFamily { Constant, SumPowers, ProductPowers, MixedProductSum };

std::string to_string(ControlFamily family);
ControlFamily control_family_from_string(std::string_view s);

/// zeta by family:
///   Constant         eps
///   SumPowers        eps * (|x|^q + |y|^q)
///   ProductPowers    eps * |x|^r * |y|^s
///   MixedProductSum  eps * (|x|^(q/2) |y|^(q/2) + |x|^q + |y|^q)
/// Exponents are rational; evaluation succeeds exactly when the powers are
/// rational (always, for integer exponents) and raises InexactPowerError
/// otherwise.
struct ControlFunction {
    ControlFamily family;
    Rational epsilon;  // > 0
    Rational q = 0;    // SumPowers / MixedProductSum exponent
    Rational r = 0;    // ProductPowers exponents
    Rational s = 0;

    static ControlFunction constant(Rational eps);
    static ControlFunction sum_powers(Rational eps, Rational q);
    static ControlFunction product_powers(Rational eps, Rational r, Rational s);
    static ControlFunction mixed_product_sum(Rational eps, Rational q);

    /// Homogeneity degree: scaling both arguments by c scales the value by
    /// |c|^degree. 0 / q / r+s / q.
    Rational degree() const;

    /// How many equal terms zeta(x, x) collapses to:
    /// zeta(x, x) = diagonal_multiplicity * eps * |x|^degree. 1 / 2 / 1 / 3.
    int diagonal_multiplicity() const;

    /// zeta at the given argument norms, exactly. Throws std::domain_error
    /// when a zero norm meets a negative exponent, InexactPowerError when a
    /// power has no rational value.
    Rational evaluate(const NormValue& nx, const NormValue& ny) const;
    Rational evaluate(const Rational& x, const Rational& y,
                      const ValuationSpec& v) const;

    std::string describe() const;
};

}  // namespace recipstab
