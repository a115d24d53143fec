#include "recipstab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace recipstab {

Integer floor_rational(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

Integer ceil_rational(const Rational& q) { return -floor_rational(-q); }

Integer pow_uint(const Integer& base, unsigned long long e) {
    Integer acc(1);
    Integer b = base;
    while (e != 0) {
        if (e & 1ull) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational pow_int(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("pow_int: 0 to a negative power");
        return Rational(0);
    }
    const unsigned long long mag =
        e < 0 ? 0ull - static_cast<unsigned long long>(e)
              : static_cast<unsigned long long>(e);
    Integer n = pow_uint(numerator(base), mag);
    Integer d = pow_uint(denominator(base), mag);
    if (e >= 0) return Rational(n, d);
    // Inverted: keep the denominator positive (the two-argument constructor
    // does not normalize signs).
    return n < 0 ? Rational(-d, -n) : Rational(d, n);
}

Integer iroot_floor(const Integer& m, unsigned n) {
    if (m < 0) throw std::domain_error("iroot_floor: negative radicand");
    if (n == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (m <= 1 || n == 1) return m;

    // Newton iteration from a one-bit-high initial guess; monotone
    // decreasing once above the root, then a local floor correction.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(m)) + 1;
    Integer x = Integer(1) << (bits / n + 1);
    while (true) {
        Integer xn1 = pow_uint(x, n - 1);
        Integer y = ((n - 1) * x + m / xn1) / n;
        if (y >= x) break;
        x = y;
    }
    while (pow_uint(x, n) > m) --x;
    while (pow_uint(x + 1, n) <= m) ++x;
    return x;
}

Rational exact_pow(const Rational& base, const Rational& exponent) {
    if (is_integer(exponent)) {
        const Integer e = numerator(exponent);
        if (e > std::numeric_limits<long long>::max() ||
            e < std::numeric_limits<long long>::min())
            throw std::domain_error("exact_pow: exponent out of range");
        return pow_int(base, static_cast<long long>(e));
    }
    if (base == 1) return Rational(1);
    if (base == 0) {
        if (exponent < 0) throw std::domain_error("exact_pow: 0 to a negative power");
        return Rational(0);
    }
    if (base < 0)
        throw InexactPowerError("exact_pow: fractional power of a negative base");

    const Integer a = numerator(exponent);
    const Integer b = denominator(exponent);  // b >= 2 here
    if (b > 64 || a > 1024 || a < -1024)
        throw std::domain_error("exact_pow: exponent out of supported range");
    const unsigned root = static_cast<unsigned>(b);

    Rational powered = pow_int(base, static_cast<long long>(a));
    Integer pn = numerator(powered);
    Integer pd = denominator(powered);
    Integer rn = iroot_floor(pn, root);
    Integer rd = iroot_floor(pd, root);
    if (pow_uint(rn, root) != pn || pow_uint(rd, root) != pd)
        throw InexactPowerError("exact_pow: inexact exponent (no rational root)");
    return Rational(rn, rd);
}

Rational parse_rational(std::string_view text) {
    auto is_int_token = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    // cpp_int's string constructor rejects a leading '+'.
    auto strip_plus = [](std::string_view t) {
        return t[0] == '+' ? t.substr(1) : t;
    };

    const std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!is_int_token(num_part))
        throw std::invalid_argument("parse_rational: malformed rational '" +
                                    std::string(text) + "'");
    Integer n{std::string(strip_plus(num_part))};
    if (slash == std::string_view::npos) return Rational(n);

    std::string_view den_part = text.substr(slash + 1);
    if (!is_int_token(den_part))
        throw std::invalid_argument("parse_rational: malformed rational '" +
                                    std::string(text) + "'");
    Integer d{std::string(strip_plus(den_part))};
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" +
                                    std::string(text) + "'");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace recipstab
