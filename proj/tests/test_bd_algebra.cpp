#include <doctest.h>

#include <cmath>

#include "bdalg/k_invariants.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace bdalg;
using support::fn;
using support::M;
using support::q;
using support::S23;
using support::U;
using support::zeta;

namespace {

BDElement monomial(std::int64_t n, const LocConstFn& f)
{
    return BDElement::monomial(S23(), n, f);
}

} // namespace

TEST_CASE("construction")
{
    CHECK(BDElement::identity(S23()) == M(LocConstFn::constant(Cyclo(1))));
    CHECK_THROWS(BDElement(S23(), 5));
    CHECK_THROWS(BDElement(support::S2(), 2, {{0, character(3, 1)}}));
    CHECK(BDElement(S23(), 4, {{1, LocConstFn::constant(Cyclo(), 4)}}).is_zero());
    CHECK(monomial(2, character(2, 1)).lifted(12).reduced() == monomial(2, character(2, 1)));
}

TEST_CASE("products")
{
    BDElement x = monomial(1, character(2, 1));
    CHECK(bd_mul(x, x) == -U(2));
    CHECK(oracle::product_matches(x, x, bd_mul(x, x)));

    BDElement b = monomial(-1, fn({q(1), zeta(1, 3), q(2)})) + M(character(4, 1));
    CHECK(bd_mul(b, BDElement::identity(S23())) == b);
    CHECK(bd_mul(BDElement::identity(S23()), b) == b);

    LocConstFn f = fn({q(1), q(2)}), g = fn({zeta(1, 3), q(0), q(-1)});
    CHECK(bd_mul(M(f), M(g)) == M(f * g));
    CHECK_THROWS(bd_mul(U(1, support::S2()), U(1, support::S3())));
}

TEST_CASE("products agree with the basis-vector oracle")
{
    Sampler rng(23);
    for (int t = 0; t < 60; ++t) {
        BDElement a = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        BDElement b = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        CHECK(oracle::product_matches(a, b, bd_mul(a, b), 6));
    }
}

TEST_CASE("adjoint")
{
    CHECK(bd_adjoint(U()) == U(-1));
    LocConstFn f = fn({zeta(1, 4), q(2)});
    CHECK(bd_adjoint(M(f)) == M(conj(f)));
    CHECK(bd_adjoint(monomial(1, character(4, 1))) == monomial(-1, conj(character(4, 1)) * zeta(1, 4)));

    Sampler rng(29);
    for (int t = 0; t < 40; ++t) {
        BDElement a = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        BDElement b = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        CHECK(oracle::adjoint_matches(a, bd_adjoint(a), 5));
        CHECK(bd_adjoint(bd_adjoint(a)) == a);
        CHECK(bd_adjoint(bd_mul(a, b)) == bd_mul(bd_adjoint(b), bd_adjoint(a)));
    }
}

TEST_CASE("covariance relation")
{
    Sampler rng(31);
    for (int t = 0; t < 100; ++t) {
        LocConstFn f = rng.loc_const(rng.pick(smooth_periods()));
        CHECK(bd_mul(M(f), U()) == bd_mul(U(), M(pullback(f, 1))));
    }
}

TEST_CASE("label derivation")
{
    CHECK(delta_L(U()) == U());
    LocConstFn f = fn({q(1), zeta(1, 3), q(0)});
    CHECK(delta_L(M(f)).is_zero());
    CHECK(delta_L(monomial(-2, f)) == monomial(-2, f) * Cyclo(-2));

    Sampler rng(37);
    for (int t = 0; t < 60; ++t) {
        BDElement a = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        BDElement b = rng.element(S23(), rng.pick(smooth_periods()), 3, 3);
        CHECK(delta_L(bd_mul(a, b)) == bd_mul(a, delta_L(b)) + bd_mul(delta_L(a), b));
    }
}

TEST_CASE("circle action")
{
    CHECK(rho_theta(U(), make_rational(1, 2)) == -U());
    LocConstFn f = fn({q(1), q(3)});
    CHECK(rho_theta(M(f), make_rational(2, 7)) == M(f));
    CHECK(rho_theta(monomial(2, f), make_rational(1, 4)) == -monomial(2, f));

    Sampler rng(41);
    for (int t = 0; t < 60; ++t) {
        BDElement b = rng.element(S23(), rng.pick(smooth_periods()), 4, 3);
        long p = static_cast<long>(rng.uniform(-6, 6)), d = static_cast<long>(rng.uniform(1, 8));
        BDElement r = rho_theta(b, make_rational(p, d));
        for (std::int64_t n = -4; n <= 4; ++n)
            CHECK(fourier_coeff(r, n) == fourier_coeff(b, n) * zeta(n * p, d));
    }
}

TEST_CASE("Fourier coefficients and reconstruction")
{
    LocConstFn f = fn({q(1), q(2)}), g = character(3, 1);
    BDElement b = monomial(1, f) + M(g);
    CHECK(fourier_coeff(b, 1) == f);
    CHECK(fourier_coeff(b, 5).is_zero());
    CHECK(fourier_coeff(b, 0) == g);
    CHECK(expectation(b) == g);

    Sampler rng(43);
    for (int t = 0; t < 100; ++t) {
        BDElement x = rng.element(S23(), rng.pick(smooth_periods()), 4, 4);
        BDElement sum(S23());
        for (std::int64_t n = -4; n <= 4; ++n)
            sum += monomial(n, fourier_coeff(x, n));
        CHECK(sum == x);
    }
}

TEST_CASE("trace")
{
    CHECK(trace(monomial(3, fn({q(1), q(2)}))).is_zero());
    CHECK(trace(M(character(9, 2))).is_zero());
    CHECK(trace(kappa(S23(), 4, 1)) == q(1, 4));
}

TEST_CASE("matrix symbol")
{
    MatrixSymbol u = matrix_symbol(U().lifted(2));
    CHECK(u.size() == 2);
    CHECK(u.at(0, 0).is_zero());
    CHECK(u.at(0, 1) == Laurent(Cyclo(1), 1));
    CHECK(u.at(1, 0) == Laurent(Cyclo(1), 0));
    CHECK(u.at(1, 1).is_zero());

    MatrixSymbol c = matrix_symbol(M(character(2, 1)));
    CHECK(c.at(0, 0) == Laurent(Cyclo(1)));
    CHECK(c.at(1, 1) == Laurent(Cyclo(-1)));
    CHECK(c.at(0, 1).is_zero());

    MatrixSymbol u2 = matrix_symbol(U(2).lifted(2));
    CHECK(u2.at(0, 0) == Laurent(Cyclo(1), 1));
    CHECK(u2.at(1, 1) == Laurent(Cyclo(1), 1));
    CHECK(u2.at(0, 1).is_zero());

    Sampler rng(47);
    for (int t = 0; t < 40; ++t) {
        std::int64_t l = rng.pick(smooth_periods());
        BDElement a = rng.element(S23(), l, 3, 3), b = rng.element(S23(), l, 3, 3);
        CHECK(matrix_symbol(bd_mul(a, b)) == matrix_symbol(a) * matrix_symbol(b));
        CHECK(matrix_symbol(bd_adjoint(a)) == matrix_symbol(a).adjoint());
        CHECK(matrix_symbol(a + b) == matrix_symbol(a) + matrix_symbol(b));
    }
}

TEST_CASE("norm anchors")
{
    NormReport d = op_norm(M(fn({q(1), q(-2)})), 0, 256);
    CHECK(d.value == 2.0);
    CHECK(d.kind == NormKind::exact);

    NormReport s = op_norm(U() + U(-1), 0, 1024);
    CHECK(std::abs(s.value - 2.0) < 1e-6);

    for (int m = 0; m <= 6; ++m)
        CHECK(op_norm(U(), m, 256).value == std::ldexp(1.0, m));

    CHECK_THROWS(op_norm(U(), 0, 8));
    CHECK_THROWS(op_norm(U(), -1, 256));
}

TEST_CASE("norms: window, contractivity, finite sections")
{
    Sampler rng(53);
    for (int t = 0; t < 60; ++t) {
        BDElement a = rng.element(S23(), rng.pick(std::vector<std::int64_t>{1, 2, 3, 4, 6}), 3, 3);
        NormReport r = base_norm(a, 256);
        double raw = grid_norm_estimate(a, 256);
        CHECK(r.lower <= r.value);
        CHECK(r.value <= r.upper);
        CHECK(raw >= r.lower * (1 - 1e-12));
        CHECK(raw <= r.upper * (1 + 1e-12));
        for (const auto& [n, f] : a.coeffs())
            CHECK(sup_norm(f) <= r.value + 1e-9);
        // a compression never exceeds the operator norm; the grid underestimates by O(1/grid²)
        CHECK(oracle::section_norm(a, 40) <= r.value * (1 + 1e-3) + 1e-9);
    }
}

TEST_CASE("M-norm recursion is bit-identical to the binomial sum")
{
    Sampler rng(59);
    for (int t = 0; t < 10; ++t) {
        BDElement a = rng.element(S23(), rng.pick(std::vector<std::int64_t>{1, 2, 3, 4}), 3, 3);
        for (int m = 0; m <= 6; ++m)
            CHECK(op_norm(a, m, 256).value == m_norm_recursive(a, m, 256));
    }
}

TEST_CASE("spectrum samples")
{
    for (auto z : spectrum_sample(U(), 64))
        CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);

    auto pts = spectrum_sample(M(character(2, 1)), 32);
    for (auto z : pts)
        CHECK((std::abs(z - 1.0) < 1e-12 || std::abs(z + 1.0) < 1e-12));

    for (auto z : spectrum_sample((U() + U(-1)) * q(1, 2), 64)) {
        CHECK(std::abs(z.imag()) < 1e-12);
        CHECK(std::abs(z.real()) <= 1 + 1e-12);
    }
}

TEST_CASE("exact rounding of rationals")
{
    CHECK(round_to_double(make_rational(1, 3)) == 1.0 / 3.0);
    CHECK(round_to_double(make_rational(-7, 2)) == -3.5);
    // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; even wins
    Rational tie(mpz_class("9007199254740993"));
    CHECK(round_to_double(tie) == 9007199254740992.0);
}
