#include "bdalg/homalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace bdalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match rows × cols");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix product: inner dimensions differ");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out(i, j) += (*this)(i, k) * o(k, j);
        }
    return out;
}

mpz_class determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

// row dst += q · row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) += q * m(src, j);
}

// col dst += q · col src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) += q * m(i, src);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            mpz_class v = abs(d(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    IntMatrix& d = f.D;
    std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            auto pivot = smallest_entry(d, t);
            if (!pivot)
                return f;
            swap_rows(d, t, pivot->first);
            swap_rows(f.U, t, pivot->first);
            swap_cols(d, t, pivot->second);
            swap_cols(f.V, t, pivot->second);

            bool cleared = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                mpz_class q = d(i, t) / d(t, t);
                add_row(d, i, t, -q);
                add_row(f.U, i, t, -q);
                cleared = cleared && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                mpz_class q = d(t, j) / d(t, t);
                add_col(d, j, t, -q);
                add_col(f.V, j, t, -q);
                cleared = cleared && d(t, j) == 0;
            }
            if (!cleared)
                continue; // a smaller remainder now exists

            // the pivot must divide the whole remaining block
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < d.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            add_row(d, t, *bad_row, 1);
            add_row(f.U, t, *bad_row, 1);
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j)
                d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < f.U.cols(); ++j)
                f.U(t, j) = -f.U(t, j);
        }
    }
    return f;
}

HomExt ext1_hom(const IntMatrix& a)
{
    SmithForm f = smith_normal_form(a);
    std::size_t steps = std::min(a.rows(), a.cols());
    std::size_t nonzero = 0;
    HomExt out;
    for (std::size_t t = 0; t < steps; ++t) {
        const mpz_class& d = f.D(t, t);
        if (d == 0)
            continue;
        ++nonzero;
        if (d >= 2)
            out.ext.torsion.push_back(d);
    }
    out.hom.rank = a.rows() - nonzero;
    return out;
}

std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& orders)
{
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        diag(i, i) = orders[i];
    return ext1_hom(diag).ext.torsion;
}

} // namespace bdalg
