#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bdalg/cyclotomic.hpp"
#include "bdalg/profinite.hpp"

namespace bdalg {

//
// Locally constant function on Z/SZ factoring through Z/lZ: values[k] = f(q(k)).
// Functions given at different periods compare equal when their repeated value
// cycles agree at the common period.
//
class LocConstFn {
public:
    LocConstFn() : values_(1) {}
    explicit LocConstFn(std::vector<Cyclo> values);

    static LocConstFn constant(const Cyclo& c, std::int64_t period = 1);
    static LocConstFn indicator(std::int64_t l, std::int64_t j); // κ_{l,j}

    std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
    const std::vector<Cyclo>& values() const { return values_; }

    // f(q(k)) for any integer k
    const Cyclo& at(std::int64_t k) const;

    bool is_zero() const;

    /// Same function presented at a multiple of the period.
    LocConstFn lifted(std::int64_t period) const;
    /// Same function at its minimal period.
    LocConstFn reduced() const;

    LocConstFn operator-() const;
    LocConstFn& operator+=(const LocConstFn& o);
    LocConstFn& operator-=(const LocConstFn& o);
    LocConstFn& operator*=(const LocConstFn& o);
    LocConstFn& operator*=(const Cyclo& c);

    friend LocConstFn operator+(LocConstFn a, const LocConstFn& b) { return a += b; }
    friend LocConstFn operator-(LocConstFn a, const LocConstFn& b) { return a -= b; }
    friend LocConstFn operator*(LocConstFn a, const LocConstFn& b) { return a *= b; }
    friend LocConstFn operator*(LocConstFn a, const Cyclo& c) { return a *= c; }
    friend LocConstFn operator*(const Cyclo& c, LocConstFn a) { return a *= c; }
    friend bool operator==(const LocConstFn& a, const LocConstFn& b);

private:
    std::vector<Cyclo> values_;
};

/// χ_l^k: values[j] = ζ_l^{jk}.
LocConstFn character(std::int64_t l, std::int64_t k);

/// values[residue(x, l)]; throws if the period does not divide the chain top.
Cyclo evaluate(const LocConstFn& f, const ProfiniteInt& x);

/// f ∘ β^m: values'[k] = values[(k + m) mod l].
LocConstFn pullback(const LocConstFn& f, std::int64_t m);

LocConstFn conj(const LocConstFn& f);

/// Mean over one period.
Cyclo haar_integral(const LocConstFn& f);

/// sup |f| as a float (max over one period).
double sup_norm(const LocConstFn& f);

//
// Exact DFT over Z/lZ: c_k = (1/l) Σ_j values[j] ζ_l^{-jk}, so that
// f = Σ_k c_k χ_l^k. Zero coefficients are omitted.
//
std::map<std::int64_t, Cyclo> char_decompose(const LocConstFn& f);

/// Σ_k c_k χ_l^k at period l.
LocConstFn char_synthesize(std::int64_t l, const std::map<std::int64_t, Cyclo>& coeffs);

} // namespace bdalg
