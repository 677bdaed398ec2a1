#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bdalg/supernatural.hpp"

namespace bdalg {

//
// Divisor chain 1 = l_0 | l_1 | … | l_N of an ambient supernatural number,
// strictly increasing. When no ambient S is given, S is taken to be l_N.
//
class DivisorChain {
public:
    explicit DivisorChain(std::vector<std::int64_t> levels,
                          std::optional<SupernaturalNumber> s = std::nullopt);

    static DivisorChain canonical(const SupernaturalNumber& s, std::size_t depth);

    const SupernaturalNumber& ambient() const { return s_; }
    const std::vector<std::int64_t>& levels() const { return levels_; }
    std::size_t depth() const { return levels_.size(); }

    // level(0) is the implicit l_0 = 1
    std::int64_t level(std::size_t n) const { return n == 0 ? 1 : levels_.at(n - 1); }
    std::int64_t top() const { return levels_.back(); }

    bool operator==(const DivisorChain& o) const { return levels_ == o.levels_; }

private:
    SupernaturalNumber s_;
    std::vector<std::int64_t> levels_;
};

//
// Element of Z/SZ truncated at the top of a chain, stored as mixed-radix digits:
// x ≡ Σ a_n l_{n-1} (mod l_N) with 0 ≤ a_n < l_n / l_{n-1}.
//
class ProfiniteInt {
public:
    ProfiniteInt(DivisorChain chain, std::vector<std::int64_t> digits);

    const DivisorChain& chain() const { return chain_; }
    const std::vector<std::int64_t>& digits() const { return digits_; }

    // x_N ∈ [0, l_N)
    std::int64_t top_residue() const;

    bool operator==(const ProfiniteInt&) const = default;

private:
    DivisorChain chain_;
    std::vector<std::int64_t> digits_;
};

ProfiniteInt q_embed(std::int64_t x, const DivisorChain& chain);
ProfiniteInt from_residue(std::int64_t r, std::int64_t l, const DivisorChain& chain);

/// π_l: x mod l for l | l_N.
std::int64_t residue(const ProfiniteInt& x, std::int64_t l);

enum class ZsOp { add, neg, mul };

ProfiniteInt zs_arith(ZsOp op, const ProfiniteInt& x, const std::optional<ProfiniteInt>& y = std::nullopt);
ProfiniteInt zs_add(const ProfiniteInt& x, const ProfiniteInt& y);
ProfiniteInt zs_neg(const ProfiniteInt& x);
ProfiniteInt zs_mul(const ProfiniteInt& x, const ProfiniteInt& y);

/// x + q(m); beta_shift(x, 1) is the odometer β.
ProfiniteInt beta_shift(const ProfiniteInt& x, std::int64_t m);

} // namespace bdalg
