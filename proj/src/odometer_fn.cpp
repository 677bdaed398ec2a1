#include "bdalg/odometer_fn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bdalg/intmath.hpp"

namespace bdalg {

LocConstFn::LocConstFn(std::vector<Cyclo> values) : values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("locally constant function needs a positive period");
}

LocConstFn LocConstFn::constant(const Cyclo& c, std::int64_t period)
{
    if (period < 1)
        throw std::invalid_argument("period must be positive");
    return LocConstFn(std::vector<Cyclo>(period, c));
}

LocConstFn LocConstFn::indicator(std::int64_t l, std::int64_t j)
{
    if (l < 1)
        throw std::invalid_argument("indicator period must be positive");
    std::vector<Cyclo> v(l);
    v[mod(j, l)] = Cyclo(1);
    return LocConstFn(std::move(v));
}

const Cyclo& LocConstFn::at(std::int64_t k) const
{
    return values_[mod(k, period())];
}

bool LocConstFn::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Cyclo& c) { return c.is_zero(); });
}

LocConstFn LocConstFn::lifted(std::int64_t period) const
{
    if (period < 1 || period % this->period() != 0)
        throw std::invalid_argument("cannot lift period " + std::to_string(this->period()) + " to " +
                                    std::to_string(period));
    if (period == this->period())
        return *this;
    std::vector<Cyclo> v;
    v.reserve(period);
    for (std::int64_t k = 0; k < period; ++k)
        v.push_back(at(k));
    return LocConstFn(std::move(v));
}

LocConstFn LocConstFn::reduced() const
{
    std::int64_t l = period();
    for (std::int64_t d = 1; d < l; ++d) {
        if (l % d != 0)
            continue;
        bool periodic = true;
        for (std::int64_t k = d; k < l && periodic; ++k)
            periodic = values_[k] == values_[k - d];
        if (periodic)
            return LocConstFn(std::vector<Cyclo>(values_.begin(), values_.begin() + d));
    }
    return *this;
}

LocConstFn LocConstFn::operator-() const
{
    LocConstFn out = *this;
    for (auto& v : out.values_)
        v = -v;
    return out;
}

LocConstFn& LocConstFn::operator+=(const LocConstFn& o)
{
    std::int64_t l = lcm64(period(), o.period());
    *this = lifted(l);
    for (std::int64_t k = 0; k < l; ++k)
        values_[k] += o.at(k);
    return *this;
}

LocConstFn& LocConstFn::operator-=(const LocConstFn& o)
{
    return *this += -o;
}

LocConstFn& LocConstFn::operator*=(const LocConstFn& o)
{
    std::int64_t l = lcm64(period(), o.period());
    *this = lifted(l);
    for (std::int64_t k = 0; k < l; ++k)
        values_[k] *= o.at(k);
    return *this;
}

LocConstFn& LocConstFn::operator*=(const Cyclo& c)
{
    for (auto& v : values_)
        v *= c;
    return *this;
}

bool operator==(const LocConstFn& a, const LocConstFn& b)
{
    std::int64_t l = lcm64(a.period(), b.period());
    for (std::int64_t k = 0; k < l; ++k)
        if (!(a.at(k) == b.at(k)))
            return false;
    return true;
}

LocConstFn character(std::int64_t l, std::int64_t k)
{
    if (l < 1)
        throw std::invalid_argument("character: period must be positive");
    std::vector<Cyclo> v;
    v.reserve(l);
    for (std::int64_t j = 0; j < l; ++j)
        v.push_back(root_of_unity(mulmod(j, k, l), l));
    return LocConstFn(std::move(v));
}

Cyclo evaluate(const LocConstFn& f, const ProfiniteInt& x)
{
    if (x.chain().top() % f.period() != 0)
        throw std::invalid_argument("evaluate: period " + std::to_string(f.period()) +
                                    " does not divide the chain top " + std::to_string(x.chain().top()));
    return f.values()[residue(x, f.period())];
}

LocConstFn pullback(const LocConstFn& f, std::int64_t m)
{
    std::int64_t l = f.period();
    std::vector<Cyclo> v;
    v.reserve(l);
    for (std::int64_t k = 0; k < l; ++k)
        v.push_back(f.at(k + mod(m, l)));
    return LocConstFn(std::move(v));
}

LocConstFn conj(const LocConstFn& f)
{
    std::vector<Cyclo> v;
    v.reserve(f.period());
    for (const auto& c : f.values())
        v.push_back(conj(c));
    return LocConstFn(std::move(v));
}

Cyclo haar_integral(const LocConstFn& f)
{
    Cyclo sum;
    for (const auto& c : f.values())
        sum += c;
    return scale(sum, make_rational(1, f.period()));
}

double sup_norm(const LocConstFn& f)
{
    double m = 0;
    for (const auto& c : f.values())
        m = std::max(m, std::abs(eval_complex(c)));
    return m;
}

std::map<std::int64_t, Cyclo> char_decompose(const LocConstFn& f)
{
    std::int64_t l = f.period();
    Rational inv_l = make_rational(1, l);
    std::map<std::int64_t, Cyclo> out;
    for (std::int64_t k = 0; k < l; ++k) {
        Cyclo c;
        for (std::int64_t j = 0; j < l; ++j)
            if (!f.values()[j].is_zero())
                c += f.values()[j] * root_of_unity(-mulmod(j, k, l), l);
        c = scale(c, inv_l);
        if (!c.is_zero())
            out.emplace(k, std::move(c));
    }
    return out;
}

LocConstFn char_synthesize(std::int64_t l, const std::map<std::int64_t, Cyclo>& coeffs)
{
    LocConstFn f = LocConstFn::constant(Cyclo(), l);
    for (const auto& [k, c] : coeffs)
        f += character(l, k) * c;
    return f;
}

} // namespace bdalg
