#include "recipstab/sampling.hpp"

#include <stdexcept>

namespace recipstab {

long long Sampler::int_in(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("empty sample range");
    const unsigned long long span =
        static_cast<unsigned long long>(hi) - static_cast<unsigned long long>(lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
}

Rational Sampler::nonzero_rational(long long mag, long long den) {
    while (true) {
        const long long num = int_in(-mag, mag);
        if (num == 0) continue;
        return Rational(num, int_in(1, den));
    }
}

std::pair<Rational, Rational> Sampler::admissible_pair(const EquationTraits& traits,
                                                       const RootMapping& m,
                                                       long long mag, long long den) {
    while (true) {
        Rational x = nonzero_rational(mag, den);
        Rational y = nonzero_rational(mag, den);
        if (!is_singular_pair(traits, m, x, y)) return {std::move(x), std::move(y)};
    }
}

FinitePerturbation Sampler::perturbation(long long max_support, long long mag,
                                         long long den) {
    FinitePerturbation pert;
    const long long count = int_in(1, max_support);
    for (long long i = 0; i < count; ++i) {
        Rational point = nonzero_rational(mag, den);
        Rational t(int_in(-98, 98), int_in(100, 999));
        pert.deviation[std::move(point)] = std::move(t);
    }
    return pert;
}

}  // namespace recipstab
