#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace bdalg;
using support::fn;
using support::q;
using support::zeta;

TEST_CASE("characters")
{
    DivisorChain c({2, 4, 8});
    CHECK(evaluate(character(4, 1), q_embed(1, c)) == zeta(1, 4));
    CHECK(character(7, 0) == LocConstFn::constant(Cyclo(1)));
    CHECK(evaluate(character(6, 2), q_embed(3, DivisorChain({2, 6}))) == Cyclo(1));
    CHECK(character(4, 5) == character(4, 1));
    CHECK(character(4, 2) == character(2, 1));
}

TEST_CASE("evaluation")
{
    DivisorChain c({2, 4});
    Cyclo a = q(3), b = zeta(1, 4);
    LocConstFn f = fn({a, b});
    CHECK(evaluate(f, q_embed(5, c)) == b);
    CHECK(evaluate(f, beta_shift(q_embed(5, c), 1)) == a);
    CHECK(evaluate(LocConstFn::constant(q(7, 2)), q_embed(3, c)) == q(7, 2));
    CHECK_THROWS(evaluate(character(3, 1), q_embed(1, c)));

    // unchanged when the period is lifted
    LocConstFn g = fn({q(1), q(2), zeta(1, 3)});
    DivisorChain d({3, 6, 12});
    for (std::int64_t x = 0; x < 12; ++x)
        CHECK(evaluate(g.lifted(12), q_embed(x, d)) == evaluate(g, q_embed(x, d)));
}

TEST_CASE("pullback")
{
    LocConstFn f = fn({q(1), q(2), q(3)});
    CHECK(pullback(f, 1) == fn({q(2), q(3), q(1)}));
    CHECK(pullback(f, 3) == f);
    CHECK(pullback(f, -1) == fn({q(3), q(1), q(2)}));
}

TEST_CASE("Haar mean")
{
    for (std::int64_t l = 2; l <= 12; ++l)
        for (std::int64_t k = 1; k < l; ++k)
            CHECK(haar_integral(character(l, k)).is_zero());
    CHECK(haar_integral(LocConstFn::constant(zeta(1, 5), 3)) == zeta(1, 5));
    CHECK(haar_integral(LocConstFn::indicator(4, 1)) == q(1, 4));

    Sampler rng(3);
    for (int t = 0; t < 100; ++t) {
        LocConstFn f = rng.loc_const(rng.pick(smooth_periods()));
        for (std::int64_t m = -5; m <= 5; ++m)
            CHECK(haar_integral(pullback(f, m)) == haar_integral(f));
    }
}

TEST_CASE("character orthogonality")
{
    for (std::int64_t l = 1; l <= 12; ++l)
        for (std::int64_t a = 0; a < l; ++a)
            for (std::int64_t b = 0; b < l; ++b)
                CHECK(haar_integral(character(l, a) * conj(character(l, b))) == Cyclo(a == b ? 1 : 0));
}

TEST_CASE("character decomposition")
{
    auto d = char_decompose(fn({q(1), q(-1)}));
    CHECK(d.size() == 1);
    CHECK(d.at(1) == Cyclo(1));

    d = char_decompose(LocConstFn::constant(zeta(1, 3)));
    CHECK(d.size() == 1);
    CHECK(d.at(0) == zeta(1, 3));

    d = char_decompose(LocConstFn::indicator(2, 0));
    CHECK(d.size() == 2);
    CHECK(d.at(0) == q(1, 2));
    CHECK(d.at(1) == q(1, 2));

    CHECK(char_decompose(LocConstFn::constant(Cyclo(), 4)).empty());
}

TEST_CASE("decomposition matches a floating-point DFT and synthesizes back")
{
    Sampler rng(17);
    for (int t = 0; t < 500; ++t) {
        LocConstFn f = rng.loc_const(rng.pick(smooth_periods()));
        auto coeffs = char_decompose(f);
        CHECK(char_synthesize(f.period(), coeffs) == f);
        auto ref = oracle::dft(f);
        for (std::int64_t k = 0; k < f.period(); ++k) {
            auto it = coeffs.find(k);
            std::complex<double> got = it == coeffs.end() ? 0.0 : oracle::to_complex(it->second);
            CHECK(std::abs(got - ref[k]) < 1e-9);
        }
    }
}

TEST_CASE("arithmetic across periods")
{
    LocConstFn a = fn({q(1), q(2)});
    LocConstFn b = fn({q(0), q(1), q(0)});
    LocConstFn s = a + b;
    CHECK(s.period() == 6);
    CHECK(s.values()[1] == q(3));
    CHECK((a * b).values()[4] == q(1));
    CHECK(fn({q(5), q(5), q(5), q(5)}).reduced() == LocConstFn::constant(q(5)));
    CHECK(fn({q(5), q(5), q(5), q(5)}).reduced().period() == 1);
    CHECK(sup_norm(fn({q(1), q(-2)})) == 2.0);
    CHECK_THROWS(LocConstFn(std::vector<Cyclo>{}));
}
