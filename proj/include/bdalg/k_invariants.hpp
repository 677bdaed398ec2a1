#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/profinite.hpp"

namespace bdalg {

// Element k/l of G_S = {k/l : l | S} ⊂ Q, kept reduced.
class GSRational {
public:
    GSRational(std::int64_t num, std::int64_t den, const std::optional<SupernaturalNumber>& s = std::nullopt);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::string str() const; // "num/den"

    GSRational operator+(const GSRational& o) const;
    GSRational operator*(std::int64_t k) const;
    bool operator==(const GSRational&) const = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Diagonal projection M_{κ_{l,j}} onto the residue class j mod l.
BDElement kappa(const SupernaturalNumber& s, std::int64_t l, std::int64_t j);

/// K₀ class of a projection via the trace; throws std::domain_error("not a projection: …").
GSRational k0_class(const BDElement& p);

//
// First chain level l_i (with l | l_i) such that (l_i / l) ∤ a: no homomorphism
// G_S → Z can send 1/l to a. Throws std::domain_error if the chain is too shallow.
//
std::int64_t hom_obstruction(std::int64_t l, std::int64_t a, const DivisorChain& chain);

//
// Element of Φ on the truncation V_S ∩ {l | l_N}, stored as its top level
// φ(l_N, ·); coarser levels follow by φ(l, k) = Σ_j φ(l_N, k + j·l).
//
class PhiFn {
public:
    PhiFn(DivisorChain chain, std::vector<std::int64_t> top);

    const DivisorChain& chain() const { return chain_; }
    const std::vector<std::int64_t>& top() const { return top_; }

    bool operator==(const PhiFn&) const = default;

private:
    DivisorChain chain_;
    std::vector<std::int64_t> top_;
};

std::int64_t phi_value(const PhiFn& phi, std::int64_t l, std::int64_t k);

enum class RMode {
    def, // Σ_{a=1}^{l'/l − 1} Σ_{j=0}^{a·l − 1} φ(l', j)
    lin  // Σ_{j=0}^{l'−2} (j+1) φ(l', j), only for l = 1
};

std::int64_t R(const PhiFn& phi, std::int64_t l, std::int64_t lp, RMode mode = RMode::def);

/// τ(φ) = φ(1,0) and ρ(φ) = (R(1, l_i) mod l_i)_i on φ's chain.
std::pair<std::int64_t, ProfiniteInt> tau_rho(const PhiFn& phi);

/// (1 − β*)ψ: top'[k] = top[k] − top[k+1 mod l_N].
PhiFn coboundary(const PhiFn& psi);

//
// Preimage of φ under 1 − β* when τ(φ) = 0, with ψ(1,0) = −R(1, l_N):
// ψ(l,0) = (R(1,l) + ψ(1,0)) / l and ψ(l,k) = ψ(l,0) − Σ_{j<k} φ(l,j).
// Throws std::domain_error("nonzero tau") otherwise.
//
PhiFn psi_construct(const PhiFn& phi);

/// φ with φ(l_n,0) = a_1 − … − a_n and φ(l_n, l_k) = a_{k+1}: R(1, l_n, lin) ≡ x (mod l_n).
PhiFn digit_phi(const ProfiniteInt& x);

} // namespace bdalg
