#pragma once

#include "recipstab/funceq.hpp"
#include "recipstab/interval.hpp"
#include "recipstab/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace recipstab {

/// Parameters of the bounded sawtooth construction: phi(x) = level / x^e on
/// (1, inf) and level elsewhere, summed over geometric scalings.
struct GajdaParams {
    EquationKind kind;
    Rational level;  // > 0 (the classical k for the nonic, c for the decic)

    static GajdaParams make(EquationKind kind, Rational level);
};

/// The bounded seed function. Exact; x = 0 is a domain error.
Rational phi(const GajdaParams& params, const Rational& x);

/// g(x) = sum over m >= 0 of S^(-m) phi(3^(-m) x), in closed form: each of
/// the M = #{m : 3^m < x} active terms contributes exactly level/x^e, and
/// the inactive tail is geometric.
struct SeriesValue {
    Rational x;
    unsigned active_terms;  // M
    Rational value;         // M*level/x^e + S*level/((S-1)*S^M)
};

SeriesValue series_eval(const GajdaParams& params, const Rational& x);

/// The global bound S*level/(S-1); attained exactly when x <= 1.
Rational series_bound(const GajdaParams& params);

/// The constant the difference operator of the series is checked against:
/// 29525*level/9841 (nonic) or 44287*level/14762 (decic).
Rational rhs_constant(const GajdaParams& params);

/// Certified enclosure of |difference operator of the series| at (x, y).
CertifiedInterval delta_series(const GajdaParams& params, const Rational& x,
                               const Rational& y, unsigned precision_bits,
                               CoefficientPolicy policy = CoefficientPolicy::Corrected);

enum class GridVerdict { Holds, Violated, Inconclusive };

std::string to_string(GridVerdict verdict);

struct GridRow {
    Rational x;
    Rational y;
    CertifiedInterval enclosure;
    Rational rhs;
    GridVerdict verdict;
};

/// Per-pair verdicts of |delta| <= rhs_constant. Rows are recorded, not
/// presumed: a Violated row is a finding.
std::vector<GridRow> verify_bound_grid(const GajdaParams& params,
                                       const std::vector<std::pair<Rational, Rational>>& pairs,
                                       unsigned precision_bits);

/// A point defeating the candidate bound alpha * |x|^(-e): at
/// x = 2*3^(m-1) with m = floor((alpha+1)/level) + 2, the series exceeds
/// (alpha+1) * x^(-e), so no exact solution within alpha * |x|^(-e) of the
/// series exists. All inequalities exact.
struct Witness {
    Rational alpha;
    long long m;
    Rational x;
    Rational g_of_x;
    Rational envelope;   // m * level / x^e, a lower bound for g(x)
    Rational threshold;  // (alpha + 1) / x^e
};

Witness nonstability_witness(const GajdaParams& params, const Rational& alpha);

}  // namespace recipstab
