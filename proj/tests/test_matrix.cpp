#include "tqft/matrix.hpp"

#include "tqft/modular.hpp"

#include <doctest.h>

#include <random>

using namespace tqft;

namespace {

MatX<CycNum> random_matrix(const CycField& f, int rows, int cols, int rank_target, std::mt19937_64& rng) {
    // product of random (rows x rank) and (rank x cols) with small entries
    auto rnd = [&]() {
        CycNum x(f);
        for (int i = 0; i < f.degree(); ++i)
            if (rng() % 3 == 0) x += Rational(static_cast<long>(rng() % 7) - 3) * CycNum::zeta(f, i);
        return x;
    };
    MatX<CycNum> a = constant_matrix<CycNum>(rows, rank_target, CycNum::zero(f));
    MatX<CycNum> b = constant_matrix<CycNum>(rank_target, cols, CycNum::zero(f));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rank_target; ++j) a(i, j) = rnd();
    for (int i = 0; i < rank_target; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = rnd();
    return a * b;
}

bool matrix_zero(const MatX<CycNum>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("rational rref and kernel") {
    MatX<Rational> a(2, 3);
    a << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
    auto r = rref(a);
    CHECK(r.rank == 1);
    MatX<Rational> k = kernel_basis(a, Rational(0), Rational(1));
    CHECK(k.cols() == 2);
    MatX<Rational> prod = a * k;
    for (Eigen::Index i = 0; i < prod.rows(); ++i)
        for (Eigen::Index j = 0; j < prod.cols(); ++j) CHECK(is_zero(prod(i, j)));
}

TEST_CASE("solve validates consistency") {
    MatX<Rational> a(2, 2);
    a << Rational(1), Rational(2), Rational(2), Rational(4);
    MatX<Rational> good(2, 1), bad(2, 1);
    good << Rational(3), Rational(6);
    bad << Rational(3), Rational(7);
    CHECK_NOTHROW(solve(a, good, Rational(0)));
    CHECK_THROWS_AS(solve(a, bad, Rational(0)), std::domain_error);
}

TEST_CASE("modular kernel agrees with dense exact kernel") {
    std::mt19937_64 rng(41);
    for (int r : {5, 7, 9}) {
        const CycField& f = CycField::get(r);
        for (int t = 0; t < 4; ++t) {
            const int rows = 6 + static_cast<int>(rng() % 4);
            const int cols = 7 + static_cast<int>(rng() % 4);
            const int rk = 3 + static_cast<int>(rng() % 3);
            MatX<CycNum> a = random_matrix(f, rows, cols, rk, rng);
            SparseMat s = SparseMat::from_dense(a, f);
            int rank_mod = -1;
            MatX<CycNum> k_mod = certified_kernel(s, &rank_mod);
            MatX<CycNum> k_exact = kernel_basis(a, CycNum::zero(f), CycNum::one(f));
            CHECK(k_mod.rows() == k_exact.rows());
            CHECK(k_mod.cols() == k_exact.cols());
            CHECK(rank_mod == cols - static_cast<int>(k_exact.cols()));
            for (Eigen::Index i = 0; i < k_mod.rows(); ++i)
                for (Eigen::Index j = 0; j < k_mod.cols(); ++j) CHECK(k_mod(i, j) == k_exact(i, j));
        }
    }
}

TEST_CASE("modular column space agrees with dense exact column space") {
    std::mt19937_64 rng(97);
    const CycField& f = CycField::get(7);
    for (int t = 0; t < 4; ++t) {
        const int rows = 8;
        const int cols = 6;
        const int rk = 2 + static_cast<int>(rng() % 3);
        MatX<CycNum> a = random_matrix(f, rows, cols, rk, rng);
        SparseMat s = SparseMat::from_dense(a, f);
        CertifiedColumnSpace cs = certified_column_space(s);
        ColumnSpace<CycNum> ce = column_space(a);
        CHECK(cs.pivot_rows == ce.pivot_rows);
        CHECK(cs.basis.cols() == ce.basis.cols());
        for (Eigen::Index i = 0; i < cs.basis.rows(); ++i)
            for (Eigen::Index j = 0; j < cs.basis.cols(); ++j) CHECK(cs.basis(i, j) == ce.basis(i, j));
    }
}

TEST_CASE("certified solve") {
    std::mt19937_64 rng(13);
    const CycField& f = CycField::get(5);
    MatX<CycNum> a = random_matrix(f, 7, 5, 4, rng);
    MatX<CycNum> x = random_matrix(f, 5, 2, 2, rng);
    MatX<CycNum> b = a * x;
    SparseMat s = SparseMat::from_dense(a, f);
    MatX<CycNum> sol = certified_solve(s, b);
    CHECK(matrix_zero(a * sol - b));
}

TEST_CASE("canonical forms are reproducible") {
    const CycField& f = CycField::get(5);
    std::mt19937_64 rng(3);
    MatX<CycNum> a = random_matrix(f, 9, 9, 4, rng);
    SparseMat s = SparseMat::from_dense(a, f);
    MatX<CycNum> k1 = certified_kernel(s);
    MatX<CycNum> k2 = certified_kernel(s);
    REQUIRE(k1.cols() == k2.cols());
    for (Eigen::Index i = 0; i < k1.rows(); ++i)
        for (Eigen::Index j = 0; j < k1.cols(); ++j) CHECK(k1(i, j) == k2(i, j));
}
