#include "bdalg/laurent.hpp"

#include <cmath>

namespace bdalg {

Laurent::Laurent(const Cyclo& c, std::int64_t degree)
{
    if (!c.is_zero())
        terms_.emplace(degree, c);
}

Cyclo Laurent::coefficient(std::int64_t degree) const
{
    auto it = terms_.find(degree);
    return it == terms_.end() ? Cyclo() : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    Laurent neg;
    for (const auto& [d, c] : o.terms_)
        neg.terms_.emplace(d, -c);
    return *this += neg;
}

Laurent& Laurent::operator*=(const Laurent& o)
{
    Laurent out;
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : o.terms_)
            out += Laurent(ca * cb, da + db);
    return *this = std::move(out);
}

bool operator==(const Laurent& a, const Laurent& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second))
            return false;
    return true;
}

Laurent Laurent::star() const
{
    Laurent out;
    for (const auto& [d, c] : terms_)
        out.terms_.emplace(-d, conj(c));
    return out;
}

std::complex<double> Laurent::eval(std::complex<double> z) const
{
    std::complex<double> sum = 0;
    for (const auto& [d, c] : terms_)
        sum += eval_complex(c) * std::pow(z, static_cast<int>(d));
    return sum;
}

} // namespace bdalg
