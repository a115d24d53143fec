#include "recipstab/valuation.hpp"

#include <charconv>

namespace recipstab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1ull) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1ull) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ValuationSpec ValuationSpec::padic(std::uint64_t prime) {
    if (!is_prime_u64(prime))
        throw std::domain_error("ValuationSpec: " + std::to_string(prime) +
                                " is not prime");
    return ValuationSpec(Kind::PAdic, prime);
}

std::string ValuationSpec::name() const {
    return is_padic() ? "p" + std::to_string(prime_) : "real";
}

ValuationSpec ValuationSpec::from_name(std::string_view name) {
    if (name == "real") return archimedean();
    if (!name.empty() && name.front() == 'p') {
        std::uint64_t p = 0;
        auto body = name.substr(1);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size())
            return padic(p);
    }
    throw std::invalid_argument("ValuationSpec: unknown field name '" +
                                std::string(name) + "' (expected \"real\" or \"p<prime>\")");
}

std::optional<long long> exact_power_of(const Rational& v, std::uint64_t p) {
    if (v <= 0) return std::nullopt;
    Integer n = numerator(v);
    Integer d = denominator(v);
    const Integer prime(p);
    if (n == 1 && d == 1) return 0;
    if (d == 1) {
        long long e = 0;
        while (n % prime == 0) {
            n /= prime;
            ++e;
        }
        return n == 1 ? std::optional<long long>(e) : std::nullopt;
    }
    if (n == 1) {
        long long e = 0;
        while (d % prime == 0) {
            d /= prime;
            --e;
        }
        return d == 1 ? std::optional<long long>(e) : std::nullopt;
    }
    return std::nullopt;
}

long long padic_valuation(const Rational& x, std::uint64_t p) {
    if (x == 0)
        throw std::domain_error("padic_valuation: valuation of 0 is +infinity");
    if (!is_prime_u64(p))
        throw std::domain_error("padic_valuation: modulus must be prime");
    const Integer prime(p);
    long long r = 0;
    Integer n = numerator(x);
    while (n % prime == 0) {
        n /= prime;
        ++r;
    }
    if (r == 0) {
        Integer d = denominator(x);
        while (d % prime == 0) {
            d /= prime;
            --r;
        }
    }
    return r;
}

NormValue norm(const Rational& x, const ValuationSpec& v) {
    if (x == 0) return NormValue{Rational(0)};
    if (!v.is_padic()) return NormValue{abs(x)};
    const long long r = padic_valuation(x, v.prime());
    return NormValue{pow_int(Rational(v.prime()), -r)};
}

NormValue tail_max_bound(std::span<const NormValue> diff_norms) {
    if (diff_norms.empty())
        throw std::invalid_argument("tail_max_bound: empty sequence");
    NormValue best = diff_norms.front();
    for (const NormValue& n : diff_norms.subspan(1))
        if (best < n) best = n;
    return best;
}

}  // namespace recipstab
