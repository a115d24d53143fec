#include "recipstab/control.hpp"

#include <sstream>
#include <stdexcept>

namespace recipstab {

std::string to_string(ControlFamily family) {
    switch (family) {
        case ControlFamily::Constant: return "constant";
        case ControlFamily::SumPowers: return "sum_powers";
        case ControlFamily::ProductPowers: return "product_powers";
        case ControlFamily::MixedProductSum: return "mixed_product_sum";
    }
    throw std::logic_error("unreachable control family");
}

ControlFamily control_family_from_string(std::string_view s) {
    if (s == "constant") return ControlFamily::Constant;
    if (s == "sum_powers") return ControlFamily::SumPowers;
    if (s == "product_powers") return ControlFamily::ProductPowers;
    if (s == "mixed_product_sum") return ControlFamily::MixedProductSum;
    throw std::invalid_argument("unknown control family: " + std::string(s));
}

namespace {
void require_positive(const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("control epsilon must be positive");
}
}  // namespace

ControlFunction ControlFunction::constant(Rational eps) {
    require_positive(eps);
    return {ControlFamily::Constant, std::move(eps)};
}

ControlFunction ControlFunction::sum_powers(Rational eps, Rational q) {
    require_positive(eps);
    return {ControlFamily::SumPowers, std::move(eps), std::move(q)};
}

ControlFunction ControlFunction::product_powers(Rational eps, Rational r, Rational s) {
    require_positive(eps);
    return {ControlFamily::ProductPowers, std::move(eps), Rational(0), std::move(r),
            std::move(s)};
}

ControlFunction ControlFunction::mixed_product_sum(Rational eps, Rational q) {
    require_positive(eps);
    return {ControlFamily::MixedProductSum, std::move(eps), std::move(q)};
}

Rational ControlFunction::degree() const {
    switch (family) {
        case ControlFamily::Constant: return Rational(0);
        case ControlFamily::SumPowers:
        case ControlFamily::MixedProductSum: return q;
        case ControlFamily::ProductPowers: return r + s;
    }
    throw std::logic_error("unreachable control family");
}

int ControlFunction::diagonal_multiplicity() const {
    switch (family) {
        case ControlFamily::Constant: return 1;
        case ControlFamily::SumPowers: return 2;
        case ControlFamily::ProductPowers: return 1;
        case ControlFamily::MixedProductSum: return 3;
    }
    throw std::logic_error("unreachable control family");
}

namespace {
Rational norm_power(const Rational& value, const Rational& e) {
    if (value == 0 && e < 0)
        throw std::domain_error("control undefined: zero norm with negative exponent");
    return exact_pow(value, e);
}
}  // namespace

Rational ControlFunction::evaluate(const NormValue& nx, const NormValue& ny) const {
    switch (family) {
        case ControlFamily::Constant: return epsilon;
        case ControlFamily::SumPowers:
            return epsilon * (norm_power(nx.value, q) + norm_power(ny.value, q));
        case ControlFamily::ProductPowers:
            return epsilon * norm_power(nx.value, r) * norm_power(ny.value, s);
        case ControlFamily::MixedProductSum:
            // |x|^(q/2)|y|^(q/2) computed as (|x||y|)^(q/2): exact in cases
            // (e.g. equal norms, odd q) where the separate halves are not.
            return epsilon * (norm_power(nx.value * ny.value, q / 2) +
                              norm_power(nx.value, q) + norm_power(ny.value, q));
    }
    throw std::logic_error("unreachable control family");
}

Rational ControlFunction::evaluate(const Rational& x, const Rational& y,
                                   const ValuationSpec& v) const {
    return evaluate(norm(x, v), norm(y, v));
}

std::string ControlFunction::describe() const {
    std::ostringstream out;
    out << to_string(family) << "(epsilon=" << format_rational(epsilon);
    switch (family) {
        case ControlFamily::Constant: break;
        case ControlFamily::SumPowers:
        case ControlFamily::MixedProductSum:
            out << ", q=" << format_rational(q);
            break;
        case ControlFamily::ProductPowers:
            out << ", r=" << format_rational(r) << ", s=" << format_rational(s);
            break;
    }
    out << ")";
    return out.str();
}

}  // namespace recipstab
