#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "bdalg/cyclotomic.hpp"

namespace bdalg {

// Laurent polynomial Σ c_d z^d with cyclotomic coefficients; zero terms are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Cyclo& c, std::int64_t degree = 0); // NOLINT

    const std::map<std::int64_t, Cyclo>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Cyclo coefficient(std::int64_t degree) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    friend bool operator==(const Laurent& a, const Laurent& b);

    /// z ↦ z^{-1} together with conjugated coefficients: the adjoint on the unit circle.
    Laurent star() const;

    std::complex<double> eval(std::complex<double> z) const;

private:
    std::map<std::int64_t, Cyclo> terms_;
};

} // namespace bdalg
