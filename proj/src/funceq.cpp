#include "recipstab/funceq.hpp"

#include <sstream>
#include <stdexcept>

namespace recipstab {

std::string to_string(EquationKind kind) {
    return kind == EquationKind::Nonic ? "nonic" : "decic";
}

std::string to_string(CoefficientPolicy policy) {
    return policy == CoefficientPolicy::Corrected ? "corrected" : "printed";
}

EquationKind equation_from_string(std::string_view s) {
    if (s == "nonic") return EquationKind::Nonic;
    if (s == "decic") return EquationKind::Decic;
    throw std::invalid_argument("unknown equation kind: " + std::string(s));
}

CoefficientPolicy policy_from_string(std::string_view s) {
    if (s == "corrected") return CoefficientPolicy::Corrected;
    if (s == "printed") return CoefficientPolicy::Printed;
    throw std::invalid_argument("unknown coefficient policy: " + std::string(s));
}

const Integer& EquationTraits::bracket_coefficient(std::size_t i,
                                                   CoefficientPolicy policy) const {
    if (policy == CoefficientPolicy::Printed && i + 1 == bracket.size())
        return printed_last;
    return bracket.at(i);
}

const EquationTraits& EquationTraits::of(EquationKind kind) {
    static const EquationTraits nonic{
        EquationKind::Nonic,
        9,
        9,
        Integer(19683),
        4,
        {Integer(256), Integer(2304), Integer(2016), Integer(336), Integer(9)},
        Integer(1),
        Integer(4921),
    };
    static const EquationTraits decic{
        EquationKind::Decic,
        10,
        5,
        Integer(59049),
        2,
        {Integer(1024), Integer(11520), Integer(13440), Integer(3360), Integer(180),
         Integer(1)},
        Integer(1),
        Integer(29525),
    };
    return kind == EquationKind::Nonic ? nonic : decic;
}

Rational RootMapping::base_at(const Rational& x) const {
    if (x == 0) throw std::domain_error("root mapping base undefined at 0");
    Rational b = base(x);
    if (b == 0) throw std::domain_error("root mapping base vanished at a nonzero point");
    return b;
}

Rational RootMapping::eval(const Rational& x) const {
    return pow_int(base_at(x), -degree);
}

RootMapping RootMapping::exact(EquationKind kind) {
    return RootMapping{[](const Rational& x) { return x; },
                       EquationTraits::of(kind).degree};
}

RootMapping FinitePerturbation::mapping(EquationKind kind) const {
    for (const auto& [point, t] : deviation) {
        if (t <= -1)
            throw std::invalid_argument("perturbation deviation must stay above -1");
        if (point == 0)
            throw std::invalid_argument("perturbation support must avoid 0");
    }
    auto table = deviation;
    return RootMapping{[table = std::move(table)](const Rational& x) -> Rational {
                           auto it = table.find(x);
                           Rational t = it == table.end() ? Rational(0) : it->second;
                           return Rational(x / (1 + t));
                       },
                       EquationTraits::of(kind).degree};
}

std::string SingularityReport::describe() const {
    std::ostringstream out;
    out << "singular pair (x=" << format_rational(x) << ", y=" << format_rational(y)
        << "): ";
    switch (cause) {
        case Cause::ZeroArgument: out << "an argument is 0"; break;
        case Cause::TwoXPlusYZero: out << "2x+y = 0"; break;
        case Cause::TwoXMinusYZero: out << "2x-y = 0"; break;
        case Cause::DenominatorZero: out << "4 b(x)^2 - b(y)^2 = 0"; break;
    }
    return out.str();
}

// Left side b(2x+y)^-e + b(2x-y)^-e; right side
// front * b(x)^-e b(y)^-e * sum_i c_i b(x)^-2i b(y)^(2i-e) / D^e with
// D = 4 b(y)^-2 - b(x)^-2. These inverse powers of the base are exactly
// what the bracket's fractional exponents reduce to.
Rational delta(const EquationTraits& traits, CoefficientPolicy policy,
               const RootMapping& m, const Rational& x, const Rational& y) {
    auto fail = [&](SingularityReport::Cause cause) {
        throw SingularityError(SingularityReport{cause, x, y});
    };

    if (x == 0 || y == 0) fail(SingularityReport::Cause::ZeroArgument);
    Rational plus = 2 * x + y;
    Rational minus = 2 * x - y;
    if (plus == 0) fail(SingularityReport::Cause::TwoXPlusYZero);
    if (minus == 0) fail(SingularityReport::Cause::TwoXMinusYZero);

    const int e = traits.degree;
    Rational bx = m.base_at(x);
    Rational by = m.base_at(y);
    Rational bx2 = pow_int(bx, -2);
    Rational denom = 4 * pow_int(by, -2) - bx2;
    if (denom == 0) fail(SingularityReport::Cause::DenominatorZero);

    Rational left = pow_int(m.base_at(plus), -e) + pow_int(m.base_at(minus), -e);

    Rational bracket(0);
    for (std::size_t i = 0; i < traits.bracket.size(); ++i) {
        Rational term = Rational(traits.bracket_coefficient(i, policy));
        term *= pow_int(bx2, static_cast<long long>(i));
        term *= pow_int(by, 2 * static_cast<long long>(i) - e);
        bracket += term;
    }

    Rational right = Rational(traits.front_factor) * pow_int(bx, -e) * pow_int(by, -e) *
                     bracket / pow_int(denom, e);
    return left - right;
}

Rational collapse_diagonal(const EquationTraits& traits, const RootMapping& m,
                           const Rational& x) {
    if (x == 0) throw std::domain_error("collapse undefined at 0");
    return m.eval(3 * x) - m.eval(x) / Rational(traits.scale);
}

bool is_singular_pair(const EquationTraits& traits, const RootMapping& m,
                      const Rational& x, const Rational& y) {
    if (x == 0 || y == 0 || 2 * x + y == 0 || 2 * x - y == 0) return true;
    Rational denom = 4 * pow_int(m.base_at(y), -2) - pow_int(m.base_at(x), -2);
    return denom == 0;
}

}  // namespace recipstab
