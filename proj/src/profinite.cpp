#include "bdalg/profinite.hpp"

#include <stdexcept>
#include <string>

#include "bdalg/intmath.hpp"

namespace bdalg {

DivisorChain::DivisorChain(std::vector<std::int64_t> levels, std::optional<SupernaturalNumber> s)
    : levels_(std::move(levels))
{
    if (levels_.empty())
        throw std::invalid_argument("divisor chain must have at least one level");
    std::int64_t prev = 1;
    for (auto l : levels_) {
        if (l <= prev || l % prev != 0)
            throw std::invalid_argument("divisor chain levels must strictly increase by divisibility (" +
                                        std::to_string(prev) + " then " + std::to_string(l) + ")");
        prev = l;
    }
    s_ = s ? std::move(*s) : SupernaturalNumber::from_integer(levels_.back());
    for (auto l : levels_)
        if (!sn_divides(l, s_))
            throw std::invalid_argument("divisor chain level " + std::to_string(l) + " does not divide S");
}

DivisorChain DivisorChain::canonical(const SupernaturalNumber& s, std::size_t depth)
{
    return DivisorChain(divisor_chain(s, depth), s);
}

ProfiniteInt::ProfiniteInt(DivisorChain chain, std::vector<std::int64_t> digits)
    : chain_(std::move(chain)), digits_(std::move(digits))
{
    if (digits_.size() != chain_.depth())
        throw std::invalid_argument("profinite integer: digit count does not match chain depth");
    for (std::size_t n = 1; n <= digits_.size(); ++n) {
        std::int64_t radix = chain_.level(n) / chain_.level(n - 1);
        if (digits_[n - 1] < 0 || digits_[n - 1] >= radix)
            throw std::invalid_argument("profinite integer: digit " + std::to_string(n) + " outside [0, " +
                                        std::to_string(radix) + ")");
    }
}

std::int64_t ProfiniteInt::top_residue() const
{
    std::int64_t x = 0;
    for (std::size_t n = 1; n <= digits_.size(); ++n)
        x += digits_[n - 1] * chain_.level(n - 1);
    return x;
}

ProfiniteInt from_residue(std::int64_t r, std::int64_t l, const DivisorChain& chain)
{
    if (l != chain.top())
        throw std::invalid_argument("from_residue: modulus " + std::to_string(l) + " is not the chain top " +
                                    std::to_string(chain.top()));
    if (r < 0 || r >= l)
        throw std::invalid_argument("from_residue: residue outside [0, l)");
    std::vector<std::int64_t> digits(chain.depth());
    for (std::size_t n = 1; n <= chain.depth(); ++n) {
        std::int64_t radix = chain.level(n) / chain.level(n - 1);
        digits[n - 1] = r % radix;
        r /= radix;
    }
    return ProfiniteInt(chain, std::move(digits));
}

ProfiniteInt q_embed(std::int64_t x, const DivisorChain& chain)
{
    return from_residue(mod(x, chain.top()), chain.top(), chain);
}

std::int64_t residue(const ProfiniteInt& x, std::int64_t l)
{
    if (l < 1 || x.chain().top() % l != 0)
        throw std::invalid_argument("residue: " + std::to_string(l) + " does not divide the chain top " +
                                    std::to_string(x.chain().top()));
    return x.top_residue() % l;
}

static void require_same_chain(const ProfiniteInt& x, const ProfiniteInt& y)
{
    if (!(x.chain() == y.chain()))
        throw std::invalid_argument("profinite arithmetic: operands live on different chains");
}

ProfiniteInt zs_add(const ProfiniteInt& x, const ProfiniteInt& y)
{
    require_same_chain(x, y);
    std::int64_t l = x.chain().top();
    return from_residue((x.top_residue() + y.top_residue()) % l, l, x.chain());
}

ProfiniteInt zs_neg(const ProfiniteInt& x)
{
    std::int64_t l = x.chain().top();
    return from_residue(mod(-x.top_residue(), l), l, x.chain());
}

ProfiniteInt zs_mul(const ProfiniteInt& x, const ProfiniteInt& y)
{
    require_same_chain(x, y);
    std::int64_t l = x.chain().top();
    return from_residue(mulmod(x.top_residue(), y.top_residue(), l), l, x.chain());
}

ProfiniteInt zs_arith(ZsOp op, const ProfiniteInt& x, const std::optional<ProfiniteInt>& y)
{
    if (op == ZsOp::neg)
        return zs_neg(x);
    if (!y)
        throw std::invalid_argument("zs_arith: binary operation needs a second operand");
    return op == ZsOp::add ? zs_add(x, *y) : zs_mul(x, *y);
}

ProfiniteInt beta_shift(const ProfiniteInt& x, std::int64_t m)
{
    std::int64_t l = x.chain().top();
    return from_residue((x.top_residue() + mod(m, l)) % l, l, x.chain());
}

} // namespace bdalg
