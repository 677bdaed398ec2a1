#include "bdalg/derivations.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bdalg/intmath.hpp"

namespace bdalg {

void DerivationData::validate() const
{
    if (!haar_integral(G).is_zero())
        throw std::invalid_argument("derivation data: G must have mean zero");
    if (covariant.count(0) != 0)
        throw std::invalid_argument("derivation data: covariant part indexed by nonzero n only");
}

BDElement der_apply(const DerivationData& d, const BDElement& b)
{
    const auto& s = b.ambient();
    BDElement out = delta_L(b) * d.C;
    out += commutator(BDElement::multiplication(s, d.G), b);
    for (const auto& [n, f] : d.covariant)
        out += commutator(BDElement::monomial(s, n, f), b);
    return out;
}

DerivationData fourier_component(const DerivationData& d, std::int64_t n)
{
    DerivationData out;
    if (n == 0) {
        out.C = d.C;
        out.G = d.G;
        return out;
    }
    if (auto it = d.covariant.find(n); it != d.covariant.end())
        out.covariant.emplace(n, it->second);
    return out;
}

LocConstFn solve_cocycle(const LocConstFn& ft)
{
    if (!haar_integral(ft).is_zero())
        throw std::domain_error("solve_cocycle: right-hand side has nonzero mean; split off the constant first");
    std::int64_t l = ft.period();
    // χ_l^k ∘ β − χ_l^k = (ζ_l^k − 1) χ_l^k
    std::map<std::int64_t, Cyclo> g;
    for (const auto& [k, c] : char_decompose(ft))
        g.emplace(k, c * reciprocal_root_minus_one(k, l));
    return char_synthesize(l, g);
}

InvariantParts invariant_decompose(const LocConstFn& f)
{
    InvariantParts out;
    out.C = haar_integral(f);
    out.G = solve_cocycle(f - LocConstFn::constant(out.C));
    return out;
}

LocConstFn recover_covariant_F(std::int64_t n, std::int64_t l, std::int64_t k, const BDElement& delta_of_chi)
{
    if (n == 0)
        throw std::invalid_argument("recover_covariant_F: n must be nonzero");
    if (mulmod(n, k, l) == 0)
        throw std::domain_error("character fixes q(n)");
    const auto& s = delta_of_chi.ambient();
    LocConstFn chi_inv = conj(character(l, k));
    BDElement x = bd_mul(bd_mul(BDElement::unitary(s, -n), delta_of_chi), BDElement::multiplication(s, chi_inv));
    // 1 / (1 − ζ) = −1 / (ζ − 1)
    Cyclo factor = -reciprocal_root_minus_one(mulmod(n, k, l), l);
    return expectation(x) * factor;
}

CharacterChoice pick_character(std::int64_t n, const SupernaturalNumber& s, std::int64_t max_h)
{
    if (n == 0)
        throw std::invalid_argument("pick_character: n must be nonzero");
    std::int64_t an = std::abs(n);
    CharacterChoice c;
    c.g = sn_gcd_finite(an, s);
    std::int64_t n_prime = an / c.g;

    if (sn_divides(checked_mul(2, c.g), s)) {
        c.h = 2;
    } else {
        for (std::int64_t h = 3; h <= max_h; h += 2) {
            if (sn_divides(checked_mul(h, c.g), s)) {
                c.h = h;
                break;
            }
        }
        if (c.h == 1)
            throw std::domain_error("pick_character: no admissible h ≤ " + std::to_string(max_h) +
                                    " with g·h | S (g = " + std::to_string(c.g) + ")");
    }

    c.l = c.g * c.h;
    auto bz = extended_gcd(n_prime, c.h);
    if (bz.gcd != 1)
        throw std::logic_error("pick_character: n' and h are not coprime");
    std::int64_t gamma = c.h % 2 == 0 ? c.h / 2 : (c.h + 1) / 2;
    // n < 0 flips the sign of n', so flip p with it
    std::int64_t p = n > 0 ? bz.x : -bz.x;
    c.j = mulmod(p, gamma, c.l);
    c.value = root_of_unity(mulmod(n, c.j, c.l), c.l);
    c.bound = std::abs(std::complex<double>(1.0) - eval_complex(c.value));
    return c;
}

Laurent nonsmooth_commutator(const SupernaturalNumber& s, std::size_t chain_depth, std::size_t n_terms,
                             std::int64_t l, std::int64_t k)
{
    if (l < 1 || !sn_divides(l, s))
        throw std::invalid_argument("nonsmooth_commutator: l must divide S");
    if (k < 0 || k >= l)
        throw std::invalid_argument("nonsmooth_commutator: k outside [0, l)");
    if (n_terms > chain_depth)
        throw std::invalid_argument("nonsmooth_commutator: N exceeds the chain depth");
    auto chain = divisor_chain(s, chain_depth);
    Laurent out;
    for (std::size_t n = 0; n <= n_terms; ++n) {
        std::int64_t ln = n == 0 ? 1 : chain[n - 1];
        out += Laurent(Cyclo(1) - root_of_unity(mulmod(k, ln, l), l), ln);
    }
    return out;
}

} // namespace bdalg
