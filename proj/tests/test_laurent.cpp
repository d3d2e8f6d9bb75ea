#include "tqft/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace tqft;

TEST_CASE("quantum integers expand as balanced Laurent polynomials") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == Laurent(1));
    // [2] = q + q^{-1} = s^2 + s^{-2}
    CHECK(qint(2) == Laurent::s_power(2) + Laurent::s_power(-2));
    CHECK(qint(-5) == -qint(5));
    // conj in s fixes every [n]
    for (int n = -8; n <= 8; ++n) CHECK(qint(n).conj() == qint(n));
}

TEST_CASE("quantum integer addition law") {
    // [m+n] = q^n [m] + q^{-m} [n]
    for (int m = -20; m <= 20; m += 3) {
        for (int n = -20; n <= 20; n += 4) {
            Laurent lhs = qint(m + n);
            Laurent rhs = Laurent::q_power(n) * qint(m) + Laurent::q_power(-m) * qint(n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("factorials and binomials") {
    CHECK(qfact(3) == qint(3) * qint(2) * qint(1));
    CHECK(qbinom(7, 0) == Laurent(1));
    CHECK(qbinom(-3, 0) == Laurent(1));

    // Oracle for qbinom(4, 2): polynomial long division of [4][3] by [2][1].
    Laurent expected = (qint(4) * qint(3)).exact_div(qint(2) * qint(1));
    CHECK(qbinom(4, 2) == expected);

    // Exact divisibility over a grid of arguments.
    for (int m = -20; m <= 20; m += 5)
        for (int n = 0; n <= 10; n += 2) CHECK_NOTHROW(qbinom(m, n));
}

TEST_CASE("exact division flags non-divisible input") {
    CHECK_THROWS_AS(qint(3).exact_div(qint(2)), std::domain_error);
    Laurent x = Laurent::s_power(5) * qint(7) * qfact(4);
    CHECK(x.exact_div(qfact(4)) == Laurent::s_power(5) * qint(7));
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(7);
    auto rand_poly = [&]() {
        Laurent x;
        for (int t = 0; t < 4; ++t)
            x += Laurent::monomial(static_cast<int>(rng() % 13) - 6, Rational(static_cast<long>(rng() % 9) - 4));
        return x;
    };
    for (int t = 0; t < 50; ++t) {
        Laurent a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}
