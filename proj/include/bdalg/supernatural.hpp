#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace bdalg {

using Exponent = std::uint32_t;

/// Exponent value standing for p^∞.
inline constexpr Exponent kInfinite = std::numeric_limits<Exponent>::max();

bool is_prime(std::int64_t n);

/// Trial-division factorization of n ≥ 1, primes ascending.
std::map<std::int64_t, Exponent> factorize(std::int64_t n);

//
// Formal product ∏ p^{e_p} over finitely many listed primes, e_p ∈ {1, 2, …, ∞}.
// Unlisted primes carry exponent 0; the empty product is 1.
//
class SupernaturalNumber {
public:
    SupernaturalNumber() = default;

    // throws std::invalid_argument on a non-prime key; zero exponents are dropped
    explicit SupernaturalNumber(std::map<std::int64_t, Exponent> factors);

    static SupernaturalNumber from_integer(std::int64_t n);

    Exponent exponent(std::int64_t p) const;
    const std::map<std::int64_t, Exponent>& factors() const { return factors_; }

    bool is_finite() const;
    // value of a finite supernatural number; throws if infinite or overflowing
    std::int64_t finite_value() const;

    bool operator==(const SupernaturalNumber&) const = default;

private:
    std::map<std::int64_t, Exponent> factors_;
};

SupernaturalNumber sn_product(const SupernaturalNumber& a, const SupernaturalNumber& b);

bool sn_divides(std::int64_t l, const SupernaturalNumber& s);
bool sn_divides(const SupernaturalNumber& k, const SupernaturalNumber& s);

/// ∏ p^{min(ε_p(n), ε_p(S))}: the largest divisor of n that divides S.
std::int64_t sn_gcd_finite(std::int64_t n, const SupernaturalNumber& s);

//
// Canonical chain l_1 | l_2 | … | l_depth of divisors of S. At step n the i-th
// prime (global index, 2 is the first) enters with exponent
// min(max(n - i + 1, 0), ε_p(S)); values 1 and repeats are skipped.
// Throws std::invalid_argument if S cannot supply `depth` distinct terms.
//
std::vector<std::int64_t> divisor_chain(const SupernaturalNumber& s, std::size_t depth);

} // namespace bdalg
