#pragma once

#include "recipstab/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace recipstab {

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Which absolute value is in force: the archimedean magnitude on Q, or
/// the p-adic absolute value |x| = p^(-v_p(x)) for a prime p.
class ValuationSpec {
public:
    enum class Kind { Archimedean, PAdic };

    static ValuationSpec archimedean() { return ValuationSpec(Kind::Archimedean, 0); }

    /// Throws std::domain_error unless `prime` passes the deterministic
    /// primality test (inputs are confined to [2, 2^64) by the type).
    static ValuationSpec padic(std::uint64_t prime);

    Kind kind() const { return kind_; }
    bool is_padic() const { return kind_ == Kind::PAdic; }
    std::uint64_t prime() const { return prime_; }

    /// "real" or "p<prime>", parseable back by from_name.
    std::string name() const;
    static ValuationSpec from_name(std::string_view name);

    bool operator==(const ValuationSpec&) const = default;

private:
    ValuationSpec(Kind kind, std::uint64_t prime) : kind_(kind), prime_(prime) {}
    Kind kind_;
    std::uint64_t prime_;
};

/// An exact norm value: nonnegative rational; for p-adic norms of nonzero
/// inputs it is an exact integer power of the prime.
struct NormValue {
    Rational value;

    bool is_zero() const { return value == 0; }
    bool operator==(const NormValue&) const = default;
};

inline bool operator<(const NormValue& a, const NormValue& b) { return a.value < b.value; }
inline bool operator<=(const NormValue& a, const NormValue& b) { return a.value <= b.value; }

/// If v == p^e exactly for some integer e, return e (v > 0 required).
std::optional<long long> exact_power_of(const Rational& v, std::uint64_t p);

/// The exponent r with x = p^r * m/n, p coprime to m and n.
/// Throws std::domain_error for x = 0 (valuation of 0 is +infinity; use
/// norm() for zero).
long long padic_valuation(const Rational& x, std::uint64_t p);

/// |x| under the given valuation, exactly. |0| = 0 for every spec.
NormValue norm(const Rational& x, const ValuationSpec& v);

/// Max of a nonempty sequence of norm values. For the norms of the
/// consecutive differences of an ultrametric sequence u_0..u_n this
/// dominates |u_n - u_0| (strong triangle inequality, telescoped).
NormValue tail_max_bound(std::span<const NormValue> diff_norms);

}  // namespace recipstab
