#include "bdalg/random.hpp"

namespace bdalg {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

bool Sampler::coin(double p_true)
{
    return std::bernoulli_distribution(p_true)(rng_);
}

Rational Sampler::rational()
{
    return make_rational(static_cast<long>(uniform(-5, 5)), static_cast<long>(uniform(1, 3)));
}

Cyclo Sampler::cyclo(std::int64_t order, int max_terms)
{
    std::map<std::int64_t, Rational> t;
    int terms = static_cast<int>(uniform(1, max_terms));
    for (int i = 0; i < terms; ++i)
        t[uniform(0, order - 1)] += rational();
    return Cyclo::from_terms(order, t);
}

LocConstFn Sampler::loc_const(std::int64_t period)
{
    std::vector<Cyclo> v;
    v.reserve(period);
    for (std::int64_t k = 0; k < period; ++k)
        v.push_back(coin(0.25) ? Cyclo() : cyclo(period));
    return LocConstFn(std::move(v));
}

LocConstFn Sampler::mean_zero(std::int64_t period)
{
    LocConstFn f = loc_const(period);
    return f - LocConstFn::constant(haar_integral(f));
}

BDElement Sampler::element(const SupernaturalNumber& s, std::int64_t period, std::int64_t max_mode, int max_terms)
{
    for (;;) {
        std::map<std::int64_t, LocConstFn> c;
        int terms = static_cast<int>(uniform(1, max_terms));
        for (int i = 0; i < terms; ++i)
            c[uniform(-max_mode, max_mode)] = loc_const(period);
        BDElement a(s, period, std::move(c));
        if (!a.is_zero())
            return a;
    }
}

SupernaturalNumber Sampler::infinite_supernatural()
{
    static const std::vector<std::int64_t> primes{2, 3, 5, 7};
    std::map<std::int64_t, Exponent> f;
    for (auto p : primes)
        if (coin())
            f[p] = coin() ? kInfinite : static_cast<Exponent>(uniform(1, 3));
    // at least one infinite exponent
    f[pick(primes)] = kInfinite;
    return SupernaturalNumber(std::move(f));
}

PhiFn Sampler::phi(const DivisorChain& chain, std::int64_t bound)
{
    std::vector<std::int64_t> top(chain.top());
    for (auto& v : top)
        v = uniform(-bound, bound);
    return PhiFn(chain, std::move(top));
}

IntMatrix Sampler::matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(uniform(lo, hi));
    return m;
}

const std::vector<std::int64_t>& smooth_periods()
{
    static const std::vector<std::int64_t> p{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24};
    return p;
}

SupernaturalNumber default_ambient()
{
    return SupernaturalNumber({{2, kInfinite}, {3, kInfinite}});
}

} // namespace bdalg
