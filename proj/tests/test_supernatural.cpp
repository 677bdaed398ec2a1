#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace bdalg;
using support::S2;
using support::S23;

TEST_CASE("product adds exponents")
{
    SupernaturalNumber a({{2, kInfinite}, {3, 1}});
    SupernaturalNumber b({{3, 1}, {5, 1}});
    CHECK(sn_product(a, b) == support::sn({{2, kInfinite}, {3, 2}, {5, 1}}));
    CHECK(sn_product(a, SupernaturalNumber()) == a);
    CHECK(sn_product(S2(), S2()) == S2());
}

TEST_CASE("divisibility of integers")
{
    CHECK(sn_divides(12, S23()));
    CHECK_FALSE(sn_divides(8, support::sn({{2, 2}, {3, kInfinite}})));
    CHECK(sn_divides(1, SupernaturalNumber()));
    CHECK(sn_divides(1, S2()));
    CHECK_FALSE(sn_divides(5, S23()));
    CHECK_THROWS_AS(sn_divides(0, S2()), std::invalid_argument);
}

TEST_CASE("gcd with a supernatural number")
{
    CHECK(sn_gcd_finite(10, S23()) == 2);
    CHECK(sn_gcd_finite(9, support::S3()) == 9);
    CHECK(sn_gcd_finite(7, S23()) == 1);
    CHECK_THROWS_AS(sn_gcd_finite(0, S2()), std::invalid_argument);

    SupernaturalNumber s({{2, 3}, {3, kInfinite}, {5, 1}});
    for (std::int64_t n = 1; n <= 400; ++n) {
        std::int64_t g = sn_gcd_finite(n, s);
        CHECK(n % g == 0);
        CHECK(sn_divides(g, s));
        CHECK(g == oracle::gcd_with(n, s));
    }
}

TEST_CASE("divisibility is transitive")
{
    SupernaturalNumber s({{2, 4}, {3, kInfinite}, {7, 1}});
    for (std::int64_t l = 1; l <= 200; ++l) {
        if (!sn_divides(l, s))
            continue;
        for (std::int64_t k = 1; k <= l; ++k)
            if (sn_divides(k, SupernaturalNumber::from_integer(l)))
                CHECK(sn_divides(k, s));
    }
}

TEST_CASE("supernatural divides supernatural")
{
    CHECK(sn_divides(support::sn({{2, 5}}), S2()));
    CHECK_FALSE(sn_divides(S2(), support::sn({{2, 5}})));
    CHECK(sn_divides(S2(), S23()));
}

TEST_CASE("canonical divisor chains")
{
    CHECK(divisor_chain(S2(), 3) == std::vector<std::int64_t>{2, 4, 8});
    CHECK(divisor_chain(S23(), 3) == std::vector<std::int64_t>{2, 12, 72});
    CHECK_THROWS_AS(divisor_chain(SupernaturalNumber::from_integer(6), 3), std::invalid_argument);
    CHECK_THROWS_AS(divisor_chain(S2(), 0), std::invalid_argument);

    SupernaturalNumber s({{2, kInfinite}, {3, 2}, {5, kInfinite}});
    auto longer = divisor_chain(s, 9);
    for (std::size_t d = 1; d < 9; ++d) {
        auto c = divisor_chain(s, d);
        CHECK(std::equal(c.begin(), c.end(), longer.begin()));
    }
    for (std::size_t i = 0; i + 1 < longer.size(); ++i) {
        CHECK(longer[i + 1] % longer[i] == 0);
        CHECK(longer[i] < longer[i + 1]);
        CHECK(sn_divides(longer[i], s));
    }
}

TEST_CASE("construction rejects composite keys")
{
    CHECK_THROWS_AS(support::sn({{4, 1}}), std::invalid_argument);
    CHECK(SupernaturalNumber::from_integer(360) == support::sn({{2, 3}, {3, 2}, {5, 1}}));
    CHECK(SupernaturalNumber::from_integer(360).finite_value() == 360);
    CHECK_FALSE(S2().is_finite());
}
