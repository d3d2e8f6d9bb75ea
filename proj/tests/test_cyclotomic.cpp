#include "tqft/cyclotomic.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace tqft;

namespace {

CycNum random_cyc(const CycField& f, std::mt19937_64& rng) {
    CycNum x(f);
    for (int i = 0; i < f.degree(); ++i) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 4);
        Rational c(num, den);
        c.canonicalize();
        if (!is_zero(c)) x += c * CycNum::zeta(f, i);
    }
    return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomial and canonical reduction") {
    const CycField& f5 = CycField::get(5);
    CHECK(f5.degree() == 4);
    // Phi_5 = 1 + x + x^2 + x^3 + x^4
    for (int i = 0; i <= 4; ++i) CHECK(f5.minimal_polynomial()[static_cast<size_t>(i)] == 1);
    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3)
    CycNum z4 = CycNum::zeta(f5, 4);
    CycNum sum = CycNum::zero(f5);
    for (int i = 0; i <= 3; ++i) sum += CycNum::zeta(f5, i);
    CHECK(z4 == -sum);
    // composite level: phi(9) = 6, Phi_9 = x^6 + x^3 + 1
    const CycField& f9 = CycField::get(9);
    CHECK(f9.degree() == 6);
    CHECK(f9.minimal_polynomial()[0] == 1);
    CHECK(f9.minimal_polynomial()[3] == 1);
    CHECK(f9.minimal_polynomial()[6] == 1);

    CHECK_THROWS(CycField::get(4));
    CHECK_THROWS(CycField::get(1));
}

TEST_CASE("specialization is a ring homomorphism with s -> -zeta") {
    const int r = 5;
    const CycField& f = CycField::get(r);
    CHECK(specialize(Laurent(1), r) == CycNum::one(f));
    // s -> -zeta
    CHECK(specialize(Laurent::s_power(1), r) == -CycNum::zeta(f, 1));
    // q^r = 1: [r] specializes to zero
    CHECK(specialize(qint(r), r).is_zero());
    CHECK(specialize(qint(7), 7).is_zero());

    std::mt19937_64 rng(11);
    auto rand_poly = [&]() {
        Laurent x;
        for (int t = 0; t < 5; ++t)
            x += Laurent::monomial(static_cast<int>(rng() % 21) - 10, Rational(static_cast<long>(rng() % 9) - 4));
        return x;
    };
    for (int t = 0; t < 40; ++t) {
        Laurent a = rand_poly(), b = rand_poly();
        CHECK(specialize(a * b, r) == specialize(a, r) * specialize(b, r));
        CHECK(specialize(a + b, r) == specialize(a, r) + specialize(b, r));
    }
}

TEST_CASE("inversion by extended gcd") {
    const CycField& f = CycField::get(5);
    CHECK(CycNum::one(f).inverse() == CycNum::one(f));
    // zeta^{-1} = zeta^{r-1}
    CHECK(CycNum::zeta(f, 1).inverse() == CycNum::zeta(f, 4));
    CHECK_THROWS_AS(CycNum::zero(f).inverse(), std::domain_error);

    // specialize([2], 5): invert and multiply back
    CycNum x = specialize(qint(2), 5);
    CHECK((x * x.inverse()).is_one());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        CycNum a = random_cyc(f, rng);
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("quantum integers are invertible at prime levels away from r") {
    for (int r : {5, 7}) {
        for (int n = 1; n < r; ++n) {
            CycNum x = specialize(qint(n), r);
            CHECK(!x.is_zero());
            CycNum inv = x.inverse();
            CHECK((x * inv).is_one());
            // for prime r these are units of the integer ring
            CHECK(inv.is_integral());
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism fixing the real subfield") {
    const CycField& f = CycField::get(7);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        CycNum a = random_cyc(f, rng), b = random_cyc(f, rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CycNum real = a + a.conj();
        CHECK(real.conj() == real);
    }
    // an element fixed by conj embeds to a real number
    CycNum real = CycNum::zeta(f, 1) + CycNum::zeta(f, 6);
    CHECK(real.conj() == real);
    CHECK(std::abs(real.embed(1).imag()) < 1e-12);
}

TEST_CASE("complex embeddings") {
    const CycField& f = CycField::get(5);
    CHECK(std::abs(CycNum::one(f).embed(2) - std::complex<double>(1.0, 0.0)) < 1e-12);
    std::complex<double> z = CycNum::zeta(f, 1).embed(1);
    std::complex<double> expected = std::polar(1.0, 2.0 * 3.14159265358979323846 / 5.0);
    CHECK(std::abs(z - expected) < 1e-12);
    CHECK_THROWS(CycNum::one(f).embed(5));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        CycNum a = random_cyc(f, rng);
        for (int k : {1, 2, 3, 4}) {
            CHECK(std::abs(a.conj().embed(k) - std::conj(a.embed(k))) < 1e-12);
        }
    }
}

TEST_CASE("integral coordinates round-trip through CycInt") {
    const CycField& f = CycField::get(5);
    CycNum x = CycNum::zeta(f, 1) + CycNum::zeta(f, 3) - CycNum::one(f);
    CycInt xi = CycInt::from(x);
    CHECK(xi.to_cyc() == x);
    CycInt prod = xi * xi;
    CHECK(prod.to_cyc() == x * x);
    CycNum half = Rational(1, 2) * CycNum::one(f);
    CHECK_THROWS_AS(CycInt::from(half), std::domain_error);
}
