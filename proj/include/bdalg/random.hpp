#pragma once

// Seeded generators for property batteries. All draws go through one
// std::mt19937_64, so a (seed, call sequence) pair reproduces its values.

#include <cstdint>
#include <random>
#include <vector>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/homalg.hpp"
#include "bdalg/k_invariants.hpp"

namespace bdalg {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi); // inclusive
    bool coin(double p_true = 0.5);

    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

    /// Small rationals p/q with |p| ≤ 5, q ≤ 3.
    Rational rational();
    /// Element of Q(ζ_order) with up to `max_terms` power-basis terms.
    Cyclo cyclo(std::int64_t order, int max_terms = 2);
    /// Period-l function with values in Q(ζ_l), roughly a quarter of them zero.
    LocConstFn loc_const(std::int64_t period);
    LocConstFn mean_zero(std::int64_t period);
    /// Nonzero element with coefficients at |n| ≤ max_mode and the given period.
    BDElement element(const SupernaturalNumber& s, std::int64_t period, std::int64_t max_mode, int max_terms = 3);

    /// Infinite supernatural number over primes {2, 3, 5, 7}.
    SupernaturalNumber infinite_supernatural();

    PhiFn phi(const DivisorChain& chain, std::int64_t bound);
    IntMatrix matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 rng_;
};

/// Divisors of 2^∞·3^∞ up to 24.
const std::vector<std::int64_t>& smooth_periods();

/// 2^∞·3^∞, the default ambient algebra of the batteries.
SupernaturalNumber default_ambient();

} // namespace bdalg
