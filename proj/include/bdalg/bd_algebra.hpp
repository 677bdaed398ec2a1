#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "bdalg/laurent.hpp"
#include "bdalg/odometer_fn.hpp"
#include "bdalg/supernatural.hpp"

namespace bdalg {

//
// Polynomial element Σ_n U^n M_{f_n} of the Bunce-Deddens algebra B_S. Every
// coefficient is carried at the single common period l | S; zero coefficients
// are dropped. Multiplication follows M_f U = U M_{f∘β}.
//
class BDElement {
public:
    explicit BDElement(SupernaturalNumber s, std::int64_t period = 1,
                       std::map<std::int64_t, LocConstFn> coeffs = {});

    static BDElement identity(const SupernaturalNumber& s);
    static BDElement unitary(const SupernaturalNumber& s, std::int64_t n = 1); // U^n
    static BDElement multiplication(const SupernaturalNumber& s, const LocConstFn& f); // M_f
    static BDElement monomial(const SupernaturalNumber& s, std::int64_t n, const LocConstFn& f); // U^n M_f

    const SupernaturalNumber& ambient() const { return s_; }
    std::int64_t period() const { return period_; }
    const std::map<std::int64_t, LocConstFn>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_diagonal() const;

    BDElement lifted(std::int64_t period) const;
    /// Smallest common period of the coefficients.
    BDElement reduced() const;

    BDElement operator-() const;
    BDElement& operator+=(const BDElement& o);
    BDElement& operator-=(const BDElement& o);
    BDElement& operator*=(const Cyclo& c);

    friend BDElement operator+(BDElement a, const BDElement& b) { return a += b; }
    friend BDElement operator-(BDElement a, const BDElement& b) { return a -= b; }
    friend BDElement operator*(BDElement a, const Cyclo& c) { return a *= c; }
    friend BDElement operator*(const Cyclo& c, BDElement a) { return a *= c; }
    friend bool operator==(const BDElement& a, const BDElement& b);

private:
    SupernaturalNumber s_;
    std::int64_t period_;
    std::map<std::int64_t, LocConstFn> coeffs_;
};

BDElement bd_mul(const BDElement& a, const BDElement& b);
BDElement bd_adjoint(const BDElement& a);
BDElement commutator(const BDElement& a, const BDElement& b);

/// [𝕃, ·]: scales the n-th coefficient by n.
BDElement delta_L(const BDElement& a);

/// ρ_θ for θ = p/q: scales the n-th coefficient by ζ_q^{np}.
BDElement rho_theta(const BDElement& a, const Rational& theta);

LocConstFn fourier_coeff(const BDElement& a, std::int64_t n);
LocConstFn expectation(const BDElement& a);
Cyclo trace(const BDElement& a);

//
// Image in C(S¹) ⊗ M_l at the element's period l: U ↦ J(z) (ones below the
// diagonal, z in the top-right corner), M_f ↦ diag(f(0), …, f(l−1)).
//
class MatrixSymbol {
public:
    explicit MatrixSymbol(std::int64_t size);

    std::int64_t size() const { return size_; }
    const Laurent& at(std::int64_t i, std::int64_t j) const { return entries_[i * size_ + j]; }
    Laurent& at(std::int64_t i, std::int64_t j) { return entries_[i * size_ + j]; }

    MatrixSymbol operator*(const MatrixSymbol& o) const;
    MatrixSymbol operator+(const MatrixSymbol& o) const;
    /// conjugate transpose with z ↦ z^{-1}
    MatrixSymbol adjoint() const;
    bool operator==(const MatrixSymbol& o) const;

    Eigen::MatrixXcd evaluate(std::complex<double> z) const;

private:
    std::int64_t size_;
    std::vector<Laurent> entries_;
};

MatrixSymbol matrix_symbol(const BDElement& a);

enum class NormKind { exact, grid_estimate };

struct NormReport {
    double value = 0;
    NormKind kind = NormKind::exact;
    int grid = 0;
    double lower = 0; // certified window
    double upper = 0;
};

/// max over `grid` equispaced z of the largest singular value of the symbol; not clamped.
double grid_norm_estimate(const BDElement& a, int grid);

/// ‖a‖ with the exact window max_n‖f_n‖∞ ≤ ‖a‖ ≤ Σ_n‖f_n‖∞.
NormReport base_norm(const BDElement& a, int grid);

//
// ‖a‖_M = Σ_j (M choose j) ‖δ_L^j(a)‖ from base_norm. The sum is accumulated
// exactly and rounded once, so it is reproducible independent of summation order.
// Window bounds are assembled by the same formula from the windows of δ_L^j(a).
//
NormReport op_norm(const BDElement& a, int m, int grid);

/// ‖a‖_M evaluated through ‖a‖_{M+1} = ‖a‖_M + ‖δ_L(a)‖_M (exact accumulation).
double m_norm_recursive(const BDElement& a, int m, int grid);

/// Eigenvalues of the symbol at `grid` sample points; a non-certified spectrum sample.
std::vector<std::complex<double>> spectrum_sample(const BDElement& a, int grid);

/// Round an exact rational to the nearest double (ties to even).
double round_to_double(const Rational& q);

} // namespace bdalg
