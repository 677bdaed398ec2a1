#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace bdalg;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> e)
{
    std::vector<mpz_class> v(e.begin(), e.end());
    return IntMatrix(r, c, std::move(v));
}

IntMatrix diag(std::vector<long> d, std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntMatrix random_unimodular(Sampler& rng, std::size_t n)
{
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2)
        return rng.coin() ? u : IntMatrix(1, 1, {mpz_class(-1)});
    for (int step = 0; step < 8; ++step) {
        auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, n - 2));
        if (j >= i)
            ++j;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = static_cast<long>(rng.uniform(-3, 3));
        u = e * u;
    }
    return u;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

} // namespace

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form(mat(1, 1, {6})).D == mat(1, 1, {6}));
    CHECK(smith_normal_form(mat(1, 1, {-6})).D == mat(1, 1, {6}));
    CHECK(smith_normal_form(diag({2, 3}, 2, 2)).D == diag({1, 6}, 2, 2));
    CHECK(smith_normal_form(mat(2, 2, {2, 4, 6, 8})).D == diag({2, 4}, 2, 2));
    CHECK(smith_normal_form(IntMatrix(2, 3)).D == IntMatrix(2, 3));
}

TEST_CASE("Smith normal form against determinantal divisors")
{
    Sampler rng(101);
    for (int t = 0; t < 300; ++t) {
        auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        auto c = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix a = rng.matrix(r, c, -20, 20);
        SmithForm f = smith_normal_form(a);
        CHECK(f.U * a * f.V == f.D);
        CHECK(abs(determinant(f.U)) == 1);
        CHECK(abs(determinant(f.V)) == 1);
        // d_1 ⋯ d_k is the gcd of the k×k minors
        mpz_class prod = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            prod *= f.D(k - 1, k - 1);
            CHECK(prod == oracle::determinantal_divisor(a, k));
        }
    }
}

TEST_CASE("determinant")
{
    CHECK(determinant(mat(2, 2, {2, 4, 6, 8})) == -8);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(mat(3, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8})) == 0);
    CHECK(determinant(mat(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
    CHECK_THROWS(determinant(IntMatrix(2, 3)));
}

TEST_CASE("Hom and Ext into Z")
{
    for (long n = 2; n <= 100; ++n) {
        HomExt he = ext1_hom(mat(1, 1, {n}));
        CHECK(he.hom.rank == 0);
        CHECK(he.ext.rank == 0);
        CHECK(he.ext.torsion == std::vector<mpz_class>{n});
    }
    HomExt free = ext1_hom(IntMatrix(2, 2));
    CHECK(free.hom.rank == 2);
    CHECK(free.ext.torsion.empty());

    HomExt d = ext1_hom(diag({2, 3}, 2, 2));
    CHECK(d.hom.rank == 0);
    CHECK(d.ext.torsion == std::vector<mpz_class>{6});

    // coker of [2 0] on Z² is Z/2 ⊕ Z
    HomExt mixed = ext1_hom(mat(2, 1, {2, 0}));
    CHECK(mixed.hom.rank == 1);
    CHECK(mixed.ext.torsion == std::vector<mpz_class>{2});
}

TEST_CASE("direct sums concatenate torsion")
{
    Sampler rng(103);
    for (int t = 0; t < 100; ++t) {
        IntMatrix a = rng.matrix(rng.uniform(1, 3), rng.uniform(1, 3), -12, 12);
        IntMatrix b = rng.matrix(rng.uniform(1, 3), rng.uniform(1, 3), -12, 12);
        HomExt ea = ext1_hom(a), eb = ext1_hom(b), eab = ext1_hom(block_diag(a, b));
        std::vector<mpz_class> orders = ea.ext.torsion;
        orders.insert(orders.end(), eb.ext.torsion.begin(), eb.ext.torsion.end());
        CHECK(eab.ext.torsion == invariant_factors(orders));
        CHECK(eab.hom.rank == ea.hom.rank + eb.hom.rank);
    }
}

TEST_CASE("invariance under unimodular change of basis")
{
    Sampler rng(107);
    for (int t = 0; t < 100; ++t) {
        auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        auto c = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix a = rng.matrix(r, c, -20, 20);
        IntMatrix b = random_unimodular(rng, r) * a * random_unimodular(rng, c);
        HomExt x = ext1_hom(a), y = ext1_hom(b);
        CHECK(x.hom == y.hom);
        CHECK(x.ext == y.ext);
    }
}

TEST_CASE("invariant factors")
{
    CHECK(invariant_factors({2, 3}) == std::vector<mpz_class>{6});
    CHECK(invariant_factors({4, 2, 1}) == std::vector<mpz_class>{2, 4});
    CHECK(invariant_factors({12, 18}) == std::vector<mpz_class>{6, 36});
    CHECK(invariant_factors({}).empty());
}
