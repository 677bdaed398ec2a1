#include "bdalg/supernatural.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bdalg/intmath.hpp"

namespace bdalg {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::map<std::int64_t, Exponent> factorize(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: argument must be positive, got " + std::to_string(n));
    std::map<std::int64_t, Exponent> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1)
        ++out[n];
    return out;
}

SupernaturalNumber::SupernaturalNumber(std::map<std::int64_t, Exponent> factors)
{
    for (auto [p, e] : factors) {
        if (!is_prime(p))
            throw std::invalid_argument("supernatural number: key " + std::to_string(p) + " is not prime");
        if (e != 0)
            factors_.emplace(p, e);
    }
}

SupernaturalNumber SupernaturalNumber::from_integer(std::int64_t n)
{
    return SupernaturalNumber(factorize(n));
}

Exponent SupernaturalNumber::exponent(std::int64_t p) const
{
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

bool SupernaturalNumber::is_finite() const
{
    return std::none_of(factors_.begin(), factors_.end(),
                        [](const auto& kv) { return kv.second == kInfinite; });
}

std::int64_t SupernaturalNumber::finite_value() const
{
    if (!is_finite())
        throw std::invalid_argument("supernatural number is infinite");
    std::int64_t v = 1;
    for (auto [p, e] : factors_)
        for (Exponent i = 0; i < e; ++i)
            v = checked_mul(v, p);
    return v;
}

SupernaturalNumber sn_product(const SupernaturalNumber& a, const SupernaturalNumber& b)
{
    auto f = a.factors();
    for (auto [p, e] : b.factors()) {
        auto& slot = f[p];
        if (slot == kInfinite || e == kInfinite || slot + static_cast<std::uint64_t>(e) >= kInfinite)
            slot = kInfinite;
        else
            slot += e;
    }
    return SupernaturalNumber(std::move(f));
}

bool sn_divides(std::int64_t l, const SupernaturalNumber& s)
{
    if (l < 1)
        throw std::invalid_argument("sn_divides: l must be positive");
    for (auto [p, e] : factorize(l))
        if (e > s.exponent(p))
            return false;
    return true;
}

bool sn_divides(const SupernaturalNumber& k, const SupernaturalNumber& s)
{
    for (auto [p, e] : k.factors()) {
        Exponent es = s.exponent(p);
        if (es != kInfinite && (e == kInfinite || e > es))
            return false;
    }
    return true;
}

std::int64_t sn_gcd_finite(std::int64_t n, const SupernaturalNumber& s)
{
    if (n < 1)
        throw std::invalid_argument("sn_gcd_finite: n must be positive");
    std::int64_t g = 1;
    for (auto [p, e] : factorize(n)) {
        Exponent m = std::min(e, s.exponent(p));
        for (Exponent i = 0; i < m; ++i)
            g *= p;
    }
    return g;
}

std::vector<std::int64_t> divisor_chain(const SupernaturalNumber& s, std::size_t depth)
{
    if (depth == 0)
        throw std::invalid_argument("divisor_chain: depth must be positive");

    // global prime index of each listed prime (2 → 1, 3 → 2, 5 → 3, …)
    std::vector<std::pair<std::int64_t, std::uint64_t>> indexed;
    for (auto [p, e] : s.factors()) {
        std::uint64_t idx = 0;
        for (std::int64_t q = 2; q <= p; ++q)
            if (is_prime(q))
                ++idx;
        indexed.emplace_back(p, idx);
    }

    // a finite S stabilizes once n exceeds every index + exponent
    std::uint64_t stable_after = 0;
    for (auto [p, idx] : indexed) {
        Exponent e = s.exponent(p);
        if (e != kInfinite)
            stable_after = std::max<std::uint64_t>(stable_after, idx + e);
    }

    std::vector<std::int64_t> chain;
    std::int64_t last = 1;
    for (std::uint64_t n = 1; chain.size() < depth; ++n) {
        std::int64_t term = 1;
        for (auto [p, idx] : indexed) {
            std::uint64_t want = n + 1 > idx ? n + 1 - idx : 0;
            Exponent e = s.exponent(p);
            std::uint64_t use = e == kInfinite ? want : std::min<std::uint64_t>(want, e);
            for (std::uint64_t i = 0; i < use; ++i)
                term = checked_mul(term, p);
        }
        if (term != last) {
            chain.push_back(term);
            last = term;
        }
        if (s.is_finite() && n > stable_after && chain.size() < depth)
            throw std::invalid_argument("divisor_chain: S admits only " + std::to_string(chain.size()) +
                                        " canonical chain terms, " + std::to_string(depth) + " requested");
    }
    return chain;
}

} // namespace bdalg
