#include "bdalg/bd_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bdalg/intmath.hpp"

namespace bdalg {

BDElement::BDElement(SupernaturalNumber s, std::int64_t period, std::map<std::int64_t, LocConstFn> coeffs)
    : s_(std::move(s)), period_(period)
{
    if (period_ < 1 || !sn_divides(period_, s_))
        throw std::invalid_argument("element period " + std::to_string(period_) + " does not divide S");
    for (auto& [n, f] : coeffs) {
        if (period_ % f.period() != 0)
            throw std::invalid_argument("coefficient at " + std::to_string(n) + " has period " +
                                        std::to_string(f.period()) + " not dividing " + std::to_string(period_));
        if (!f.is_zero())
            coeffs_.emplace(n, f.lifted(period_));
    }
}

BDElement BDElement::identity(const SupernaturalNumber& s)
{
    return BDElement(s, 1, {{0, LocConstFn::constant(Cyclo(1))}});
}

BDElement BDElement::unitary(const SupernaturalNumber& s, std::int64_t n)
{
    return BDElement(s, 1, {{n, LocConstFn::constant(Cyclo(1))}});
}

BDElement BDElement::multiplication(const SupernaturalNumber& s, const LocConstFn& f)
{
    return BDElement(s, f.period(), {{0, f}});
}

BDElement BDElement::monomial(const SupernaturalNumber& s, std::int64_t n, const LocConstFn& f)
{
    return BDElement(s, f.period(), {{n, f}});
}

bool BDElement::is_diagonal() const
{
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

BDElement BDElement::lifted(std::int64_t period) const
{
    return BDElement(s_, period, coeffs_);
}

BDElement BDElement::reduced() const
{
    std::int64_t l = 1;
    std::map<std::int64_t, LocConstFn> c;
    for (const auto& [n, f] : coeffs_) {
        auto r = f.reduced();
        l = lcm64(l, r.period());
        c.emplace(n, std::move(r));
    }
    return BDElement(s_, l, std::move(c));
}

BDElement BDElement::operator-() const
{
    BDElement out = *this;
    for (auto& kv : out.coeffs_)
        kv.second = -kv.second;
    return out;
}

static void require_same_ambient(const BDElement& a, const BDElement& b)
{
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("elements belong to different Bunce-Deddens algebras");
}

BDElement& BDElement::operator+=(const BDElement& o)
{
    require_same_ambient(*this, o);
    std::int64_t l = lcm64(period_, o.period_);
    std::map<std::int64_t, LocConstFn> c;
    for (const auto& [n, f] : coeffs_)
        c.emplace(n, f.lifted(l));
    for (const auto& [n, f] : o.coeffs_) {
        auto [it, inserted] = c.try_emplace(n, f.lifted(l));
        if (!inserted)
            it->second += f;
    }
    return *this = BDElement(s_, l, std::move(c));
}

BDElement& BDElement::operator-=(const BDElement& o)
{
    return *this += -o;
}

BDElement& BDElement::operator*=(const Cyclo& c)
{
    std::map<std::int64_t, LocConstFn> out;
    for (const auto& [n, f] : coeffs_)
        out.emplace(n, f * c);
    return *this = BDElement(s_, period_, std::move(out));
}

bool operator==(const BDElement& a, const BDElement& b)
{
    if (!(a.s_ == b.s_) || a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin(); ia != a.coeffs_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second))
            return false;
    return true;
}

BDElement bd_mul(const BDElement& a, const BDElement& b)
{
    require_same_ambient(a, b);
    std::int64_t l = lcm64(a.period(), b.period());
    std::map<std::int64_t, LocConstFn> c;
    // U^m M_f · U^n M_g = U^{m+n} M_{(f∘β^n)·g}
    for (const auto& [m, f] : a.coeffs()) {
        for (const auto& [n, g] : b.coeffs()) {
            LocConstFn term = pullback(f.lifted(l), n) * g;
            auto [it, inserted] = c.try_emplace(m + n, term);
            if (!inserted)
                it->second += term;
        }
    }
    return BDElement(a.ambient(), l, std::move(c));
}

BDElement bd_adjoint(const BDElement& a)
{
    std::map<std::int64_t, LocConstFn> c;
    for (const auto& [n, f] : a.coeffs())
        c.emplace(-n, pullback(conj(f), -n));
    return BDElement(a.ambient(), a.period(), std::move(c));
}

BDElement commutator(const BDElement& a, const BDElement& b)
{
    return bd_mul(a, b) - bd_mul(b, a);
}

BDElement delta_L(const BDElement& a)
{
    std::map<std::int64_t, LocConstFn> c;
    for (const auto& [n, f] : a.coeffs())
        c.emplace(n, f * Cyclo(static_cast<long>(n)));
    return BDElement(a.ambient(), a.period(), std::move(c));
}

BDElement rho_theta(const BDElement& a, const Rational& theta)
{
    Rational t = theta;
    t.canonicalize();
    if (!t.get_num().fits_slong_p() || !t.get_den().fits_slong_p())
        throw std::invalid_argument("rho_theta: angle numerator/denominator out of range");
    std::int64_t p = t.get_num().get_si(), q = t.get_den().get_si();
    std::map<std::int64_t, LocConstFn> c;
    for (const auto& [n, f] : a.coeffs())
        c.emplace(n, f * root_of_unity(mulmod(n, p, q), q));
    return BDElement(a.ambient(), a.period(), std::move(c));
}

LocConstFn fourier_coeff(const BDElement& a, std::int64_t n)
{
    auto it = a.coeffs().find(n);
    return it == a.coeffs().end() ? LocConstFn::constant(Cyclo(), a.period()) : it->second;
}

LocConstFn expectation(const BDElement& a)
{
    return fourier_coeff(a, 0);
}

Cyclo trace(const BDElement& a)
{
    return haar_integral(expectation(a));
}

MatrixSymbol::MatrixSymbol(std::int64_t size) : size_(size), entries_(size * size)
{
    if (size < 1)
        throw std::invalid_argument("matrix symbol size must be positive");
}

MatrixSymbol MatrixSymbol::operator*(const MatrixSymbol& o) const
{
    if (size_ != o.size_)
        throw std::invalid_argument("matrix symbol size mismatch");
    MatrixSymbol out(size_);
    for (std::int64_t i = 0; i < size_; ++i)
        for (std::int64_t k = 0; k < size_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (std::int64_t j = 0; j < size_; ++j)
                if (!o.at(k, j).is_zero())
                    out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

MatrixSymbol MatrixSymbol::operator+(const MatrixSymbol& o) const
{
    if (size_ != o.size_)
        throw std::invalid_argument("matrix symbol size mismatch");
    MatrixSymbol out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += o.entries_[i];
    return out;
}

MatrixSymbol MatrixSymbol::adjoint() const
{
    MatrixSymbol out(size_);
    for (std::int64_t i = 0; i < size_; ++i)
        for (std::int64_t j = 0; j < size_; ++j)
            out.at(j, i) = at(i, j).star();
    return out;
}

bool MatrixSymbol::operator==(const MatrixSymbol& o) const
{
    return size_ == o.size_ && entries_ == o.entries_;
}

Eigen::MatrixXcd MatrixSymbol::evaluate(std::complex<double> z) const
{
    Eigen::MatrixXcd m(size_, size_);
    for (std::int64_t i = 0; i < size_; ++i)
        for (std::int64_t j = 0; j < size_; ++j)
            m(i, j) = at(i, j).eval(z);
    return m;
}

static std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    return (a - mod(a, b)) / b;
}

MatrixSymbol matrix_symbol(const BDElement& a)
{
    std::int64_t l = a.period();
    MatrixSymbol sym(l);
    // J^n e_j = z^{⌊(j+n)/l⌋} e_{(j+n) mod l}
    for (const auto& [n, f] : a.coeffs())
        for (std::int64_t j = 0; j < l; ++j)
            if (!f.values()[j].is_zero())
                sym.at(mod(j + n, l), j) += Laurent(f.values()[j], floor_div(j + n, l));
    return sym;
}

namespace {

// symbol entries with coefficients converted to floating point once
struct NumericSymbol {
    std::int64_t size;
    std::vector<std::vector<std::pair<int, std::complex<double>>>> entries;

    explicit NumericSymbol(const MatrixSymbol& s) : size(s.size()), entries(s.size() * s.size())
    {
        for (std::int64_t i = 0; i < size; ++i)
            for (std::int64_t j = 0; j < size; ++j)
                for (const auto& [d, c] : s.at(i, j).terms())
                    entries[i * size + j].emplace_back(static_cast<int>(d), eval_complex(c));
    }

    Eigen::MatrixXcd at(double angle) const
    {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
        for (std::int64_t i = 0; i < size; ++i)
            for (std::int64_t j = 0; j < size; ++j)
                for (const auto& [d, c] : entries[i * size + j])
                    m(i, j) += c * std::polar(1.0, angle * d);
        return m;
    }
};

double angle_at(int t, int grid)
{
    return 2 * std::numbers::pi * t / grid;
}

void require_grid(int grid)
{
    if (grid < 16)
        throw std::invalid_argument("grid must be at least 16, got " + std::to_string(grid));
}

std::vector<std::int64_t> binomial_row(int m)
{
    std::vector<std::int64_t> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<std::int64_t> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j)
            next[j] = checked_add(row[j - 1], row[j]);
        row = std::move(next);
    }
    return row;
}

} // namespace

double grid_norm_estimate(const BDElement& a, int grid)
{
    require_grid(grid);
    if (a.is_zero())
        return 0;
    NumericSymbol sym(matrix_symbol(a));
    double best = 0;
    for (int t = 0; t < grid; ++t) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sym.at(angle_at(t, grid)));
        best = std::max(best, svd.singularValues()(0));
    }
    return best;
}

NormReport base_norm(const BDElement& a, int grid)
{
    require_grid(grid);
    NormReport r;
    r.grid = grid;
    for (const auto& kv : a.coeffs()) {
        double s = sup_norm(kv.second);
        r.lower = std::max(r.lower, s);
        r.upper += s;
    }
    // a single Fourier mode U^n M_f has norm ‖f‖∞ since U^n is unitary
    if (a.coeffs().size() <= 1) {
        r.kind = NormKind::exact;
        r.value = r.lower;
        return r;
    }
    r.kind = NormKind::grid_estimate;
    r.value = std::clamp(grid_norm_estimate(a, grid), r.lower, r.upper);
    return r;
}

double round_to_double(const Rational& q)
{
    double d = q.get_d(); // truncates toward zero
    if (Rational(d) == q)
        return d;
    double away = std::nextafter(d, sgn(q) > 0 ? HUGE_VAL : -HUGE_VAL);
    Rational err_d = abs(q - Rational(d));
    Rational err_away = abs(Rational(away) - q);
    if (err_d < err_away)
        return d;
    if (err_away < err_d)
        return away;
    return (std::bit_cast<std::uint64_t>(d) & 1u) == 0 ? d : away;
}

NormReport op_norm(const BDElement& a, int m, int grid)
{
    if (m < 0)
        throw std::invalid_argument("op_norm: M must be nonnegative");
    auto weights = binomial_row(m);
    NormReport out;
    out.grid = grid;
    out.kind = NormKind::exact;
    Rational value, lower, upper;
    BDElement cur = a;
    for (int j = 0; j <= m; ++j) {
        NormReport r = base_norm(cur, grid);
        if (r.kind == NormKind::grid_estimate)
            out.kind = NormKind::grid_estimate;
        Rational w(static_cast<long>(weights[j]));
        value += w * Rational(r.value);
        lower += w * Rational(r.lower);
        upper += w * Rational(r.upper);
        if (j < m)
            cur = delta_L(cur);
    }
    out.value = round_to_double(value);
    out.lower = round_to_double(lower);
    out.upper = round_to_double(upper);
    return out;
}

double m_norm_recursive(const BDElement& a, int m, int grid)
{
    if (m < 0)
        throw std::invalid_argument("m_norm_recursive: M must be nonnegative");
    // δ_L^j(a) and its base norm, built on demand
    std::vector<BDElement> derived{a};
    std::vector<double> norms;
    auto base = [&](int j) {
        while (static_cast<int>(derived.size()) <= j)
            derived.push_back(delta_L(derived.back()));
        while (static_cast<int>(norms.size()) <= j)
            norms.push_back(base_norm(derived[norms.size()], grid).value);
        return norms[j];
    };
    // ‖δ^j a‖_k = ‖δ^j a‖_{k-1} + ‖δ^{j+1} a‖_{k-1}
    std::function<Rational(int, int)> rec = [&](int j, int k) -> Rational {
        if (k == 0)
            return Rational(base(j));
        return rec(j, k - 1) + rec(j + 1, k - 1);
    };
    return round_to_double(rec(0, m));
}

std::vector<std::complex<double>> spectrum_sample(const BDElement& a, int grid)
{
    require_grid(grid);
    NumericSymbol sym(matrix_symbol(a));
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(grid) * sym.size);
    for (int t = 0; t < grid; ++t) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sym.at(angle_at(t, grid)), false);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            out.push_back(es.eigenvalues()(i));
    }
    return out;
}

} // namespace bdalg
