#pragma once

#include <cstdint>
#include <map>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/laurent.hpp"

namespace bdalg {

//
// Classification data of a derivation
//     δ = C·δ_L + [M_G, ·] + Σ_{n≠0} [U^n M_{F_n}, ·]
// with G of mean zero, which makes (C, G, {F_n}) unique.
//
struct DerivationData {
    Cyclo C;
    LocConstFn G;
    std::map<std::int64_t, LocConstFn> covariant;

    // throws std::invalid_argument if G has nonzero mean or a covariant key is 0
    void validate() const;
};

BDElement der_apply(const DerivationData& d, const BDElement& b);

/// n = 0 keeps (C, G); n ≠ 0 keeps only F_n.
DerivationData fourier_component(const DerivationData& d, std::int64_t n);

/// G with G∘β − G = F̃ and ∫G = 0; throws std::domain_error if ∫F̃ ≠ 0.
LocConstFn solve_cocycle(const LocConstFn& ft);

struct InvariantParts {
    Cyclo C;
    LocConstFn G;
};

/// The invariant derivation with δ(U) = U M_F splits as C·δ_L + [M_G, ·].
InvariantParts invariant_decompose(const LocConstFn& f);

//
// F_n from δ(M_χ) for χ = χ_l^k, using U^{-n} δ(M_χ) M_χ^{-1} = (1 − χ(q(n))) M_{F_n}.
// Throws std::domain_error("character fixes q(n)") when l | nk.
//
LocConstFn recover_covariant_F(std::int64_t n, std::int64_t l, std::int64_t k, const BDElement& delta_of_chi);

struct CharacterChoice {
    std::int64_t l = 1;   // period g·h
    std::int64_t j = 0;   // χ = χ_l^j
    std::int64_t g = 1;   // gcd(|n|, S)
    std::int64_t h = 1;
    Cyclo value;          // χ(q(n)) = ζ_h^γ
    double bound = 0;     // |1 − χ(q(n))|
};

//
// Character with |1 − χ(q(n))| ≥ √3: g = gcd(|n|, S), h = 2 if 2g | S, otherwise
// the smallest odd h ≥ 3 with g·h | S; j = p·γ where p·n' + q·h = 1 and
// γ = h/2 or (h+1)/2. Throws std::domain_error when no h ≤ max_h is admissible.
//
CharacterChoice pick_character(std::int64_t n, const SupernaturalNumber& s, std::int64_t max_h = 1'000'000);

//
// Truncated F(z) − F(ζ_l^k z) for F = Σ_{n=0}^{N} z^{l_n} along the canonical
// chain of depth chain_depth (l_0 = 1): Σ_n (1 − ζ_l^{k·l_n}) z^{l_n}.
//
Laurent nonsmooth_commutator(const SupernaturalNumber& s, std::size_t chain_depth, std::size_t n_terms,
                             std::int64_t l, std::int64_t k);

} // namespace bdalg
