#pragma once

#include "recipstab/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace recipstab {

enum class EquationKind { Nonic, Decic };

/// Which final nonic bracket coefficient is in force. The typeset equation
/// carries 1; expanding (2x+y)^9 + (2x-y)^9 forces 9 (the exact solution
/// only satisfies the corrected form). Corrected is the default everywhere;
/// Printed is retained so audits can show the residual it leaves.
enum class CoefficientPolicy { Corrected, Printed };

std::string to_string(EquationKind kind);
std::string to_string(CoefficientPolicy policy);
EquationKind equation_from_string(std::string_view s);
CoefficientPolicy policy_from_string(std::string_view s);

/// Constants of one reciprocal equation. Bracket term i carries
/// coefficient[i] and fractional powers f(x)^(2i/e') f(y)^((e'-2i)/e')
/// which, through a base representation f = b^(-degree), are the exact
/// monomials b(x)^(-2i) b(y)^(2i-degree).
struct EquationTraits {
    EquationKind kind;
    int degree;                       // 9 or 10
    int root_index;                   // 9 (ninths) or 5 (fifths)
    Integer scale;                    // 3^degree: 19683 or 59049
    int front_factor;                 // 4 or 2
    std::vector<Integer> bracket;     // corrected coefficients
    Integer printed_last;             // last coefficient as typeset
    Integer coefficient_sum;          // sum of corrected coefficients

    const Integer& bracket_coefficient(std::size_t i, CoefficientPolicy policy) const;

    static const EquationTraits& of(EquationKind kind);
};

/// A mapping n(x) = b(x)^(-degree) represented through its base function b,
/// so every fractional power the equations need is an exact integer power
/// of b. b must be pure, deterministic, and nonzero on nonzero arguments.
struct RootMapping {
    std::function<Rational(const Rational&)> base;
    int degree;

    /// b(x)^(-degree). Throws std::domain_error for x = 0 or if the base
    /// function violates its nonzero contract.
    Rational eval(const Rational& x) const;
    Rational base_at(const Rational& x) const;

    /// The exact solution b(x) = x.
    static RootMapping exact(EquationKind kind);
};

/// A finitely supported deviation t with t(x) > -1, defining
/// b(x) = x / (1 + t(x)) and t = 0 off the support. Equals the exact
/// solution off the support.
struct FinitePerturbation {
    std::map<Rational, Rational> deviation;

    RootMapping mapping(EquationKind kind) const;
};

struct SingularityReport {
    enum class Cause { ZeroArgument, TwoXPlusYZero, TwoXMinusYZero, DenominatorZero };
    Cause cause;
    Rational x;
    Rational y;

    std::string describe() const;
};

class SingularityError : public std::domain_error {
public:
    explicit SingularityError(SingularityReport report)
        : std::domain_error(report.describe()), report_(std::move(report)) {}
    const SingularityReport& report() const { return report_; }

private:
    SingularityReport report_;
};

/// The difference operator (left side minus right side of the equation),
/// evaluated exactly through the base representation. Throws
/// SingularityError when x, y, 2x+y or 2x-y vanishes or when the bracket
/// denominator does (4 b(x)^2 = b(y)^2).
Rational delta(const EquationTraits& traits, CoefficientPolicy policy,
               const RootMapping& m, const Rational& x, const Rational& y);

/// n(3x) - n(x)/scale. Equal to delta(_, Corrected, m, x, x) for every
/// mapping; the algebraic engine behind the diagonal step of the direct
/// method.
Rational collapse_diagonal(const EquationTraits& traits, const RootMapping& m,
                           const Rational& x);

/// True iff (x, y) violates a delta precondition for this mapping.
bool is_singular_pair(const EquationTraits& traits, const RootMapping& m,
                      const Rational& x, const Rational& y);

}  // namespace recipstab
