#pragma once

#include <vector>

#include "bdalg/bd_algebra.hpp"
#include "bdalg/random.hpp"

namespace support {

using namespace bdalg;

inline SupernaturalNumber sn(std::map<std::int64_t, Exponent> f)
{
    return SupernaturalNumber(std::move(f));
}

inline SupernaturalNumber S2()
{
    return SupernaturalNumber({{2, kInfinite}});
}

inline SupernaturalNumber S3()
{
    return SupernaturalNumber({{3, kInfinite}});
}

inline SupernaturalNumber S23()
{
    return default_ambient();
}

inline Cyclo q(long p, long d = 1)
{
    return Cyclo(make_rational(p, d));
}

inline Cyclo zeta(std::int64_t k, std::int64_t n)
{
    return root_of_unity(k, n);
}

inline LocConstFn fn(std::vector<Cyclo> values)
{
    return LocConstFn(std::move(values));
}

inline BDElement U(std::int64_t n = 1, const SupernaturalNumber& s = S23())
{
    return BDElement::unitary(s, n);
}

inline BDElement M(const LocConstFn& f, const SupernaturalNumber& s = S23())
{
    return BDElement::multiplication(s, f);
}

} // namespace support
