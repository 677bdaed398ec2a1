#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bdalg {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Coefficients of Φ_N, lowest degree first. Process-wide cache, guarded.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

//
// Element of Q(ζ_N) written in the power basis ζ_N^e. Values are kept reduced
// modulo Φ_N (so exponents stay below φ(N)) and are moved to a smaller order
// N/g whenever every exponent is a multiple of g | N. Values of different
// orders compare equal when they agree in Q(ζ_lcm).
//
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(const Rational& r); // NOLINT: rationals embed
    Cyclo(long n) : Cyclo(Rational(n)) {} // NOLINT

    static Cyclo from_terms(std::int64_t order, const std::map<std::int64_t, Rational>& terms);

    std::int64_t order() const { return order_; }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_rational() const;

    // reduced representation at a multiple of the current order
    std::map<std::int64_t, Rational> terms_at(std::int64_t order) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

private:
    std::int64_t order_ = 1;
    std::map<std::int64_t, Rational> terms_;
};

/// ζ_N^k with k reduced mod N.
Cyclo root_of_unity(std::int64_t k, std::int64_t n);

enum class CycloOp { add, mul, conj, scale };

// conj ignores b; scale requires b to be rational
Cyclo cyclo_arith(CycloOp op, const Cyclo& a, const Cyclo& b = Cyclo());

Cyclo conj(const Cyclo& a);
Cyclo scale(const Cyclo& a, const Rational& r);
bool is_zero(const Cyclo& a);

/// 1 / (ζ_l^k − 1); throws std::domain_error when l | k.
Cyclo reciprocal_root_minus_one(std::int64_t k, std::int64_t l);

//
// Σ c_e (cos, sin)(2πe/N) in long double, returned as double. `precision` is the
// requested number of significant bits; values above 53 are clamped. The error
// is bounded by terms · max|c_e| · 2^{-precision+2}.
//
std::complex<double> eval_complex(const Cyclo& a, int precision = 53);

} // namespace bdalg
