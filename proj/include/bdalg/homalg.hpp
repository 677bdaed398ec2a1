#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace bdalg {

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<mpz_class>& entries() const { return entries_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// Bareiss fraction-free determinant of a square matrix.
mpz_class determinant(const IntMatrix& a);

// Z^rank ⊕ ⊕_i Z/d_i with d_1 | d_2 | …, every d_i ≥ 2.
struct FGAbelianGroup {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const FGAbelianGroup&) const = default;
};

struct SmithForm {
    IntMatrix U, D, V; // U·A·V = D
};

//
// Smith normal form with unimodular U (rows×rows) and V (cols×cols). Pivoting
// rule: the entry of least absolute value in the remaining block, first in
// row-major order. Diagonal entries are nonnegative and form a divisibility chain.
//
SmithForm smith_normal_form(const IntMatrix& a);

struct HomExt {
    FGAbelianGroup hom;
    FGAbelianGroup ext;
};

/// Hom(G, Z) and Ext¹(G, Z) for G = coker(A : Z^cols → Z^rows).
HomExt ext1_hom(const IntMatrix& a);

/// Renormalize a list of cyclic orders into invariant factors d_1 | d_2 | … (orders ≤ 1 dropped).
std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& orders);

} // namespace bdalg
