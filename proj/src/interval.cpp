#include "recipstab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace recipstab {

RationalInterval RationalInterval::point(Rational v) { return {v, v}; }

RationalInterval RationalInterval::make(Rational lo, Rational hi) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    return {std::move(lo), std::move(hi)};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero())
        throw std::domain_error("interval division by an enclosure of zero");
    return a * RationalInterval{Rational(1) / b.hi, Rational(1) / b.lo};
}

RationalInterval pow_interval(const RationalInterval& a, long long e) {
    if (e < 0) {
        if (a.contains_zero())
            throw std::domain_error("negative power of an enclosure of zero");
        return RationalInterval::point(Rational(1)) / pow_interval(a, -e);
    }
    if (e == 0) return RationalInterval::point(Rational(1));
    const Rational plo = pow_int(a.lo, e);
    const Rational phi = pow_int(a.hi, e);
    // Monotone on each sign region; only even powers of straddling
    // intervals need the zero floor.
    if (a.contains_zero() && e % 2 == 0)
        return {Rational(0), std::max(plo, phi)};
    return {std::min(plo, phi), std::max(plo, phi)};
}

RationalInterval abs_interval(const RationalInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

RationalInterval nth_root_enclosure(const Rational& value, unsigned n, unsigned bits) {
    if (value < 0) throw std::domain_error("root enclosure of a negative value");
    if (n == 0) throw std::domain_error("zeroth root");
    if (value == 0) return RationalInterval::point(Rational(0));

    // Scale so the integer root carries `bits` fractional bits:
    // r = floor((value * 2^(n*bits))^(1/n)) gives (r/2^bits)^n <= value and
    // ((r+1)/2^bits)^n > value.
    const Integer scaled_num = numerator(value) << (static_cast<unsigned long long>(n) *
                                                    bits);
    const Integer den = denominator(value);
    const Integer floor_scaled = scaled_num / den;
    const Integer r = iroot_floor(floor_scaled, n);
    const Rational scale = pow_int(Rational(2), static_cast<long long>(bits));

    const bool exact = scaled_num % den == 0 && pow_uint(r, n) == floor_scaled;
    const Rational lo = Rational(r) / scale;
    if (exact) return RationalInterval::point(lo);
    return {lo, Rational(r + 1) / scale};
}

bool enclosure_is_tight(const RationalInterval& iv) {
    const Rational mag = std::max({abs(iv.lo), abs(iv.hi), Rational(1)});
    return iv.width() * pow_int(Rational(2), 40) <= mag;
}

CertifiedInterval delta_enclosure(const EquationTraits& traits,
                                  CoefficientPolicy policy,
                                  const std::function<Rational(const Rational&)>& f,
                                  const Rational& x, const Rational& y,
                                  unsigned precision_bits) {
    if (x == 0 || y == 0 || 2 * x + y == 0 || 2 * x - y == 0)
        throw std::domain_error("delta enclosure needs x, y, 2x+y, 2x-y nonzero");

    auto value_at = [&](const Rational& point) {
        Rational v = f(point);
        if (v <= 0)
            throw std::domain_error("delta enclosure needs a positive-valued mapping");
        return v;
    };
    const Rational fx = value_at(x);
    const Rational fy = value_at(y);
    const Rational left = value_at(2 * x + y) + value_at(2 * x - y);

    const unsigned u = static_cast<unsigned>(traits.root_index);
    const long long sigma = 2LL * traits.root_index / traits.degree;
    const RationalInterval rx = nth_root_enclosure(fx, u, precision_bits);
    const RationalInterval ry = nth_root_enclosure(fy, u, precision_bits);

    const RationalInterval denom =
        RationalInterval::point(Rational(4)) * pow_interval(ry, sigma) -
        pow_interval(rx, sigma);
    if (denom.contains_zero())
        return CertifiedInterval{Rational(0), Rational(0), false,
                                 "bracket denominator enclosure contains zero "
                                 "(singular or near-singular pair)"};

    RationalInterval bracket = RationalInterval::point(Rational(0));
    for (std::size_t i = 0; i < traits.bracket.size(); ++i) {
        RationalInterval term =
            RationalInterval::point(Rational(traits.bracket_coefficient(i, policy))) *
            pow_interval(rx, sigma * static_cast<long long>(i)) *
            pow_interval(ry, traits.root_index - sigma * static_cast<long long>(i));
        bracket = bracket + term;
    }

    const RationalInterval right =
        RationalInterval::point(Rational(traits.front_factor) * fx * fy) * bracket /
        pow_interval(denom, traits.degree);
    const RationalInterval diff = RationalInterval::point(left) - right;
    const RationalInterval magnitude = abs_interval(diff);

    CertifiedInterval out{magnitude.lo, magnitude.hi, true, ""};
    if (!enclosure_is_tight(magnitude)) {
        out.conclusive = false;
        out.reason = "enclosure width exceeds the verdict threshold";
    }
    return out;
}

}  // namespace recipstab
