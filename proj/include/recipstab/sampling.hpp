#pragma once

#include "recipstab/funceq.hpp"
#include "recipstab/rational.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace recipstab {

/// Deterministic sample streams: mt19937_64 driven through explicit modulo
/// reduction, so identical seeds give identical streams on every platform
/// (the std <random> distributions are not portable across libraries).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }

    /// Integer in [lo, hi] (inclusive); modulo reduction, whose bias is
    /// irrelevant at the ranges used here.
    long long int_in(long long lo, long long hi);

    /// Nonzero rational with numerator in [-mag, mag], denominator in [1, den].
    Rational nonzero_rational(long long mag, long long den);

    /// A pair avoiding every difference-operator precondition for the mapping.
    std::pair<Rational, Rational> admissible_pair(const EquationTraits& traits,
                                                  const RootMapping& m, long long mag,
                                                  long long den);

    /// Finitely supported deviation with 1..max_support nonzero points and
    /// values in (-99/100, 99/100).
    FinitePerturbation perturbation(long long max_support, long long mag,
                                    long long den);

private:
    std::mt19937_64 rng_;
};

}  // namespace recipstab
