#include "tqft/tl.hpp"

#include "tqft/cyclotomic.hpp"

#include <doctest.h>

using namespace tqft;

namespace {

Laurent delta_l() { return -(Laurent::q_power(1) + Laurent::q_power(-1)); }

TLElement<Laurent> e_gen(int n, int k) {
    TLElement<Laurent> x;
    x.n = n;
    x.add_term(TLDiagram::cup_cap(n, k), Laurent(1));
    return x;
}

}  // namespace

TEST_CASE("diagram composition") {
    // e1 e1 = delta e1 in TL_2
    TLElement<Laurent> e1 = e_gen(2, 1);
    TLElement<Laurent> sq = tl_multiply(e1, e1, delta_l());
    CHECK(sq == e1.scaled(delta_l()));

    // e1 e2 e1 = e1 in TL_3
    TLElement<Laurent> a = e_gen(3, 1), b = e_gen(3, 2);
    TLElement<Laurent> prod = tl_multiply(tl_multiply(a, b, delta_l()), a, delta_l());
    CHECK(prod == a);

    // id x = x
    TLElement<Laurent> id2 = TLElement<Laurent>::unit(2, Laurent(1));
    CHECK(tl_multiply(id2, e1, delta_l()) == e1);
}

TEST_CASE("TL relations e_k^2 = delta e_k and far commutation") {
    for (int n : {3, 4, 5}) {
        for (int k = 1; k < n; ++k) {
            TLElement<Laurent> e = e_gen(n, k);
            CHECK(tl_multiply(e, e, delta_l()) == e.scaled(delta_l()));
            for (int l = k + 2; l < n; ++l) {
                TLElement<Laurent> f = e_gen(n, l);
                CHECK(tl_multiply(e, f, delta_l()) == tl_multiply(f, e, delta_l()));
            }
            if (k + 1 < n) {
                TLElement<Laurent> f = e_gen(n, k + 1);
                CHECK(tl_multiply(tl_multiply(e, f, delta_l()), e, delta_l()) == e);
            }
        }
    }
}

TEST_CASE("Jones-Wenzl projectors over the rational function field") {
    auto qi = [](int k) { return FracLaurent(qint(k)); };
    auto dv = [](const FracLaurent& a, const FracLaurent& b) { return a / b; };
    FracLaurent one(Laurent(1));
    FracLaurent delta(delta_l());

    // f_1 = id
    auto f1 = jones_wenzl<FracLaurent>(1, one, delta, qi, dv);
    CHECK(f1 == TLElement<FracLaurent>::unit(1, one));

    // f_2 = id + [1]/[2] e_1
    auto f2 = jones_wenzl<FracLaurent>(2, one, delta, qi, dv);
    TLElement<FracLaurent> expect = TLElement<FracLaurent>::unit(2, one);
    TLElement<FracLaurent> e1;
    e1.n = 2;
    e1.add_term(TLDiagram::cup_cap(2, 1), dv(qi(1), qi(2)));
    expect = expect + e1;
    CHECK(f2 == expect);

    // idempotence and annihilation, n <= 5 over the generic field
    for (int n = 2; n <= 5; ++n) {
        auto fn = jones_wenzl<FracLaurent>(n, one, delta, qi, dv);
        CHECK(tl_multiply(fn, fn, delta) == fn);
        for (int k = 1; k < n; ++k) {
            TLElement<FracLaurent> ek;
            ek.n = n;
            ek.add_term(TLDiagram::cup_cap(n, k), one);
            CHECK(tl_multiply(ek, fn, delta).is_zero());
            CHECK(tl_multiply(fn, ek, delta).is_zero());
        }
    }
}

TEST_CASE("Jones-Wenzl projectors at the specialization") {
    for (int r : {5, 7}) {
        const CycField& fld = CycField::get(r);
        auto qi = [&](int k) { return specialize(qint(k), r); };
        auto dv = [](const CycNum& a, const CycNum& b) { return a / b; };
        CycNum one = CycNum::one(fld);
        CycNum delta = specialize(delta_l(), r);
        for (int n = 2; n <= r - 1; ++n) {
            auto fn = jones_wenzl<CycNum>(n, one, delta, qi, dv);
            CHECK(tl_multiply(fn, fn, delta) == fn);
            for (int k = 1; k < n; ++k) {
                TLElement<CycNum> ek;
                ek.n = n;
                ek.add_term(TLDiagram::cup_cap(n, k), one);
                CHECK(tl_multiply(ek, fn, delta).is_zero());
            }
        }
        // n = r would need [r]^{-1}: must throw
        CHECK_THROWS(jones_wenzl<CycNum>(r, one, delta, qi, dv));
    }
}
