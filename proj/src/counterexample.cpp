#include "recipstab/counterexample.hpp"

#include <stdexcept>

namespace recipstab {

GajdaParams GajdaParams::make(EquationKind kind, Rational level) {
    if (level <= 0)
        throw std::invalid_argument("counterexample level constant must be positive");
    return {kind, std::move(level)};
}

Rational phi(const GajdaParams& params, const Rational& x) {
    if (x == 0) throw std::domain_error("phi undefined at 0");
    if (x > 1) return params.level / pow_int(x, EquationTraits::of(params.kind).degree);
    return params.level;
}

SeriesValue series_eval(const GajdaParams& params, const Rational& x) {
    if (x == 0) throw std::domain_error("series undefined at 0");
    const EquationTraits& traits = EquationTraits::of(params.kind);
    const Rational scale(traits.scale);

    unsigned M = 0;
    for (Rational power(1); power < x; power *= 3) ++M;

    const Rational tail = scale * params.level /
                          ((scale - 1) * pow_int(scale, static_cast<long long>(M)));
    Rational value = tail;
    if (M > 0)
        value += Rational(M) * params.level / pow_int(x, traits.degree);
    return SeriesValue{x, M, value};
}

Rational series_bound(const GajdaParams& params) {
    const Rational scale(EquationTraits::of(params.kind).scale);
    return scale * params.level / (scale - 1);
}

Rational rhs_constant(const GajdaParams& params) {
    return params.kind == EquationKind::Nonic
               ? Rational(29525) * params.level / 9841
               : Rational(44287) * params.level / 14762;
}

CertifiedInterval delta_series(const GajdaParams& params, const Rational& x,
                               const Rational& y, unsigned precision_bits,
                               CoefficientPolicy policy) {
    const EquationTraits& traits = EquationTraits::of(params.kind);
    auto g = [&params](const Rational& point) { return series_eval(params, point).value; };
    return delta_enclosure(traits, policy, g, x, y, precision_bits);
}

std::string to_string(GridVerdict verdict) {
    switch (verdict) {
        case GridVerdict::Holds: return "holds";
        case GridVerdict::Violated: return "violated";
        case GridVerdict::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable verdict");
}

std::vector<GridRow> verify_bound_grid(
    const GajdaParams& params,
    const std::vector<std::pair<Rational, Rational>>& pairs,
    unsigned precision_bits) {
    const Rational rhs = rhs_constant(params);
    std::vector<GridRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        CertifiedInterval enclosure = delta_series(params, x, y, precision_bits);
        GridVerdict verdict = GridVerdict::Inconclusive;
        if (enclosure.conclusive) {
            if (enclosure.upper <= rhs)
                verdict = GridVerdict::Holds;
            else if (enclosure.lower > rhs)
                verdict = GridVerdict::Violated;
        }
        rows.push_back(GridRow{x, y, std::move(enclosure), rhs, verdict});
    }
    return rows;
}

Witness nonstability_witness(const GajdaParams& params, const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("candidate bound must be positive");
    const EquationTraits& traits = EquationTraits::of(params.kind);

    const Integer m_int = floor_rational((alpha + 1) / params.level) + 2;
    const long long m = static_cast<long long>(m_int);
    const Rational x = 2 * pow_int(Rational(3), m - 1);

    const SeriesValue g = series_eval(params, x);
    const Rational xe = pow_int(x, traits.degree);
    Witness w{alpha, m, x, g.value, Rational(m) * params.level / xe,
              (alpha + 1) / xe};

    // These hold by construction (m*level > alpha+1 and M(x) = m); a failure
    // here means the closed form itself broke.
    if (!(Rational(m) * params.level > alpha + 1) ||
        g.active_terms != static_cast<unsigned>(m) || !(w.g_of_x >= w.envelope) ||
        !(w.envelope > w.threshold))
        throw std::logic_error("witness construction produced an invalid certificate");
    return w;
}

}  // namespace recipstab
