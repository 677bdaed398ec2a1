#pragma once

// Reference implementations used only by the tests. They work from first
// principles (basis vectors, direct sums, minors) rather than the library's
// structured algorithms.

#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/homalg.hpp"
#include "bdalg/k_invariants.hpp"

namespace oracle {

using bdalg::BDElement;
using bdalg::Cyclo;
using bdalg::LocConstFn;

inline std::int64_t pmod(std::int64_t a, std::int64_t m)
{
    return ((a % m) + m) % m;
}

// Sparse column: E_k ↦ Σ c_i E_i
using Column = std::map<std::int64_t, Cyclo>;

// (U^n M_f) E_k = f(k) E_{k+n}
inline Column act(const BDElement& a, const Column& v)
{
    Column out;
    for (const auto& [k, c] : v)
        for (const auto& [n, f] : a.coeffs()) {
            Cyclo w = c * f.values()[pmod(k, f.period())];
            if (!w.is_zero())
                out[k + n] += w;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline Column basis(std::int64_t k)
{
    Column c;
    c.emplace(k, Cyclo(1));
    return c;
}

inline Cyclo entry(const Column& c, std::int64_t i)
{
    auto it = c.find(i);
    return it == c.end() ? Cyclo() : it->second;
}

// Do a and b act identically on E_k for k in [-w, w]?
inline bool same_action(const BDElement& a, const BDElement& b, std::int64_t w = 8)
{
    for (std::int64_t k = -w; k <= w; ++k) {
        Column x = act(a, basis(k));
        Column y = act(b, basis(k));
        if (x.size() != y.size())
            return false;
        for (const auto& [i, c] : x)
            if (!(entry(y, i) == c))
                return false;
    }
    return true;
}

inline bool product_matches(const BDElement& a, const BDElement& b, const BDElement& ab, std::int64_t w = 8)
{
    for (std::int64_t k = -w; k <= w; ++k) {
        Column x = act(a, act(b, basis(k)));
        Column y = act(ab, basis(k));
        if (x.size() != y.size())
            return false;
        for (const auto& [i, c] : x)
            if (!(entry(y, i) == c))
                return false;
    }
    return true;
}

// ⟨E_i, a* E_k⟩ = conj ⟨E_k, a E_i⟩
inline bool adjoint_matches(const BDElement& a, const BDElement& astar, std::int64_t w = 8)
{
    for (std::int64_t k = -w; k <= w; ++k)
        for (std::int64_t i = -w; i <= w; ++i)
            if (!(entry(act(astar, basis(k)), i) == bdalg::conj(entry(act(a, basis(i)), k))))
                return false;
    return true;
}

inline std::complex<double> to_complex(const Cyclo& c)
{
    std::complex<double> z = 0;
    for (const auto& [e, q] : c.terms())
        z += q.get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / c.order());
    return z;
}

// Norm of the compression of a to span{E_k : |k| ≤ w}; a lower bound for ‖a‖.
inline double section_norm(const BDElement& a, std::int64_t w)
{
    std::int64_t n = 2 * w + 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (std::int64_t k = -w; k <= w; ++k)
        for (const auto& [i, c] : act(a, basis(k)))
            if (i >= -w && i <= w)
                m(i + w, k + w) = to_complex(c);
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

// Complex DFT: c_k = (1/l) Σ_j f(j) e^{-2πijk/l}
inline std::vector<std::complex<double>> dft(const LocConstFn& f)
{
    std::int64_t l = f.period();
    std::vector<std::complex<double>> out(l);
    for (std::int64_t k = 0; k < l; ++k) {
        for (std::int64_t j = 0; j < l; ++j)
            out[k] += to_complex(f.values()[j]) * std::polar(1.0, -2 * std::numbers::pi * j * k / l);
        out[k] /= static_cast<double>(l);
    }
    return out;
}

// φ(l, k) = Σ_{i ≡ k mod l} top[i]
inline std::int64_t phi_level(const std::vector<std::int64_t>& top, std::int64_t l, std::int64_t k)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < top.size(); ++i)
        if (pmod(static_cast<std::int64_t>(i) - k, l) == 0)
            s += top[i];
    return s;
}

inline std::int64_t r_def(const std::vector<std::int64_t>& top, std::int64_t l, std::int64_t lp)
{
    std::int64_t s = 0;
    for (std::int64_t a = 1; a < lp / l; ++a)
        for (std::int64_t j = 0; j < a * l; ++j)
            s += phi_level(top, lp, j);
    return s;
}

inline std::int64_t r_lin(const std::vector<std::int64_t>& top, std::int64_t lp)
{
    std::int64_t s = 0;
    for (std::int64_t j = 0; j + 1 < lp; ++j)
        s += (j + 1) * phi_level(top, lp, j);
    return s;
}

inline mpz_class minor_det(const bdalg::IntMatrix& a, const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols)
{
    // Laplace expansion along the first row
    if (rows.size() == 1)
        return a(rows[0], cols[0]);
    mpz_class d = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != c)
                sub_cols.push_back(cols[t]);
        mpz_class term = a(rows[0], cols[c]) * minor_det(a, sub_rows, sub_cols);
        d += c % 2 == 0 ? term : mpz_class(-term);
    }
    return d;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// k-th determinantal divisor: gcd of all k×k minors
inline mpz_class determinantal_divisor(const bdalg::IntMatrix& a, std::size_t k)
{
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            mpz_class m = minor_det(a, r, c);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    return g;
}

// Largest divisor of n that divides S, by enumerating divisors.
inline std::int64_t gcd_with(std::int64_t n, const bdalg::SupernaturalNumber& s)
{
    std::int64_t best = 1;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0 && bdalg::sn_divides(d, s))
            best = d;
    return best;
}

} // namespace oracle
