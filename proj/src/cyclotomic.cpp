#include "bdalg/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "bdalg/intmath.hpp"

namespace bdalg {

Rational make_rational(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: \"" + text + "\"");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic polynomial order must be positive");

    static std::mutex mutex;
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;

    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }

    // X^n − 1 divided by Φ_d for every proper divisor d
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        const auto& phi = cyclotomic_polynomial(d); // monic
        std::size_t dp = phi.size() - 1;
        std::vector<std::int64_t> quot(poly.size() - dp, 0);
        for (std::size_t i = poly.size() - 1; i + 1 > dp; --i) {
            std::int64_t c = poly[i];
            if (c == 0)
                continue;
            quot[i - dp] = c;
            for (std::size_t j = 0; j <= dp; ++j)
                poly[i - dp + j] = checked_add(poly[i - dp + j], -checked_mul(c, phi[j]));
        }
        poly = std::move(quot);
    }

    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

namespace {

// dense coefficients at order n (length n) → terms reduced mod Φ_n
std::map<std::int64_t, Rational> reduce_dense(std::vector<Rational> dense, std::int64_t n)
{
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    for (std::size_t e = dense.size(); e-- > deg;) {
        if (sgn(dense[e]) == 0)
            continue;
        Rational c = dense[e];
        for (std::size_t i = 0; i <= deg; ++i)
            if (phi[i] != 0)
                dense[e - deg + i] -= c * phi[i];
    }
    std::map<std::int64_t, Rational> out;
    for (std::size_t e = 0; e < deg && e < dense.size(); ++e)
        if (sgn(dense[e]) != 0)
            out.emplace(static_cast<std::int64_t>(e), dense[e]);
    return out;
}

std::vector<Rational> to_dense(const std::map<std::int64_t, Rational>& terms, std::int64_t from, std::int64_t to)
{
    std::vector<Rational> dense(to);
    std::int64_t stretch = to / from;
    for (const auto& [e, c] : terms)
        dense[mod(e * stretch, to)] += c;
    return dense;
}

} // namespace

Cyclo::Cyclo(const Rational& r)
{
    if (sgn(r) != 0)
        terms_.emplace(0, r);
}

Cyclo Cyclo::from_terms(std::int64_t order, const std::map<std::int64_t, Rational>& terms)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rational> dense(order);
    for (const auto& [e, c] : terms)
        dense[mod(e, order)] += c;
    auto reduced = reduce_dense(std::move(dense), order);

    // descend while every exponent shares a factor with the order
    for (;;) {
        std::int64_t g = order;
        for (const auto& kv : reduced)
            g = std::gcd(g, kv.first);
        if (g <= 1)
            break;
        std::int64_t next = order / g;
        std::vector<Rational> dense_next(next);
        for (const auto& [e, c] : reduced)
            dense_next[e / g] += c;
        reduced = reduce_dense(std::move(dense_next), next);
        order = next;
    }

    Cyclo out;
    out.order_ = order;
    out.terms_ = std::move(reduced);
    return out;
}

std::optional<Rational> Cyclo::as_rational() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0)
        return terms_.begin()->second;
    return std::nullopt;
}

std::map<std::int64_t, Rational> Cyclo::terms_at(std::int64_t order) const
{
    if (order % order_ != 0)
        throw std::invalid_argument("terms_at: target order is not a multiple of the value's order");
    if (order == order_)
        return terms_;
    return reduce_dense(to_dense(terms_, order_, order), order);
}

Cyclo Cyclo::operator-() const
{
    Cyclo out = *this;
    for (auto& kv : out.terms_)
        kv.second = -kv.second;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    std::int64_t n = lcm64(order_, o.order_);
    auto dense = to_dense(terms_, order_, n);
    std::int64_t stretch = n / o.order_;
    for (const auto& [e, c] : o.terms_)
        dense[e * stretch] += c;
    std::map<std::int64_t, Rational> sparse;
    for (std::int64_t e = 0; e < n; ++e)
        if (sgn(dense[e]) != 0)
            sparse.emplace(e, dense[e]);
    return *this = from_terms(n, sparse);
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    return *this += -o;
}

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
    if (is_zero() || o.is_zero())
        return *this = Cyclo();
    std::int64_t n = lcm64(order_, o.order_);
    std::int64_t sa = n / order_, sb = n / o.order_;
    std::vector<Rational> dense(n);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            dense[(ea * sa + eb * sb) % n] += ca * cb;
    std::map<std::int64_t, Rational> sparse;
    for (std::int64_t e = 0; e < n; ++e)
        if (sgn(dense[e]) != 0)
            sparse.emplace(e, dense[e]);
    return *this = from_terms(n, sparse);
}

bool operator==(const Cyclo& a, const Cyclo& b)
{
    if (a.order_ == b.order_)
        return a.terms_ == b.terms_;
    std::int64_t n = lcm64(a.order_, b.order_);
    return a.terms_at(n) == b.terms_at(n);
}

Cyclo root_of_unity(std::int64_t k, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("root_of_unity: order must be positive");
    std::int64_t g = std::gcd(mod(k, n), n);
    return Cyclo::from_terms(n / g, {{mod(k, n) / g, Rational(1)}});
}

Cyclo conj(const Cyclo& a)
{
    std::map<std::int64_t, Rational> t;
    for (const auto& [e, c] : a.terms())
        t.emplace(mod(-e, a.order()), c);
    return Cyclo::from_terms(a.order(), t);
}

Cyclo scale(const Cyclo& a, const Rational& r)
{
    if (sgn(r) == 0)
        return Cyclo();
    Cyclo out = a;
    return out *= Cyclo(r);
}

bool is_zero(const Cyclo& a)
{
    return a.is_zero();
}

Cyclo cyclo_arith(CycloOp op, const Cyclo& a, const Cyclo& b)
{
    switch (op) {
    case CycloOp::add:
        return a + b;
    case CycloOp::mul:
        return a * b;
    case CycloOp::conj:
        return conj(a);
    case CycloOp::scale: {
        auto r = b.as_rational();
        if (!r)
            throw std::invalid_argument("cyclo_arith scale: factor must be rational");
        return scale(a, *r);
    }
    }
    throw std::invalid_argument("cyclo_arith: unknown operation");
}

Cyclo reciprocal_root_minus_one(std::int64_t k, std::int64_t l)
{
    if (l < 1)
        throw std::invalid_argument("reciprocal_root_minus_one: order must be positive");
    std::int64_t g = std::gcd(mod(k, l), l);
    std::int64_t m = l / g;
    if (m == 1)
        throw std::domain_error("ζ_l^k − 1 vanishes: l divides k");
    // with ζ a primitive m-th root: (ζ − 1) Σ_{j<m} j ζ^j = m
    std::int64_t kk = mod(k, l) / g;
    std::map<std::int64_t, Rational> t;
    for (std::int64_t j = 1; j < m; ++j)
        t[mod(j * kk, m)] += make_rational(j, m);
    return Cyclo::from_terms(m, t);
}

std::complex<double> eval_complex(const Cyclo& a, int precision)
{
    if (precision < 1)
        throw std::invalid_argument("eval_complex: precision must be positive");
    long double re = 0, im = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (const auto& [e, c] : a.terms()) {
        long double coef = static_cast<long double>(c.get_d());
        if (e == 0) {
            re += coef;
            continue;
        }
        long double ang = two_pi * static_cast<long double>(e) / static_cast<long double>(a.order());
        re += coef * std::cos(ang);
        im += coef * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

} // namespace bdalg
