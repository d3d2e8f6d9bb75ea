#include "tqft/flatwords.hpp"

#include "tqft/tl.hpp"

#include <doctest.h>

using namespace tqft;

namespace {

Laurent delta_l() { return -(Laurent::q_power(1) + Laurent::q_power(-1)); }

}  // namespace

TEST_CASE("flat word enumeration") {
    // n=2: "()" and ".." only
    auto w20 = flat_words(2, 0);
    REQUIRE(w20.size() == 1);
    CHECK(w20[0].w == "()");
    auto w22 = flat_words(2, 2);
    REQUIRE(w22.size() == 1);
    CHECK(w22[0].w == "..");
    // no dot inside a pair: "(.)" is not a flat word
    CHECK(flat_words(3, 1).size() == 2);  // "()." and ".()"
    for (const auto& w : flat_words(3, 1)) CHECK(w.w != "(.)");
    // parity mismatch: empty
    CHECK(flat_words(3, 0).empty());
    // counts are the TL irreducible dimensions: n=6, b=0 -> Catalan 5
    CHECK(flat_words(6, 0).size() == 5);
    CHECK(flat_words(6, 2).size() == 9);
    CHECK(flat_words(6, 6).size() == 1);
}

TEST_CASE("skein form values") {
    // n=2, b=0: h(e_(), e_()) = delta
    FlatWord cup{"()"};
    CHECK(skein_form(cup, cup) == delta_l());

    // nested word anchor: h(e_w, e_w) = delta^m for w = ()()...()...
    for (int m = 1; m <= 3; ++m) {
        for (int b = 0; b <= 2; ++b) {
            std::string s;
            for (int i = 0; i < m; ++i) s += "()";
            for (int i = 0; i < b; ++i) s += ".";
            FlatWord w{s};
            CHECK(skein_form(w, w) == delta_l().pow(static_cast<unsigned>(m)));
        }
    }

    // a cap hitting the projector kills the value
    FlatWord a{"().."};
    FlatWord b{"..()"};
    CHECK(skein_form(a, b).is_zero());

    // symmetry on all pairs at n=6
    for (int bb : {0, 2}) {
        auto words = flat_words(6, bb);
        for (const auto& x : words)
            for (const auto& y : words) CHECK(skein_form(x, y) == skein_form(y, x));
    }
}

TEST_CASE("skein form against the explicit projector sandwich") {
    // Validate the through-strand rule against a literal f_b expansion.
    // Word tangles are padded to square TL_n diagrams (the b through ends
    // followed by nested phantom cups), composed, and sandwiched between
    // padded projectors; the coefficient of the padded identity must equal
    // the combinatorial value.
    auto qi = [](int k) { return FracLaurent(qint(k)); };
    auto dv = [](const FracLaurent& a, const FracLaurent& b) { return a / b; };
    FracLaurent one(Laurent(1));
    FracLaurent delta(delta_l());
    for (int n = 2; n <= 4; ++n) {
        for (int b = n % 2; b <= n; b += 2) {
            auto words = flat_words(n, b);
            auto fb = jones_wenzl<FracLaurent>(b, one, delta, qi, dv);
            auto pad = [n, b](const FlatTangle& t) {
                TLDiagram d;
                d.n = n;
                d.match.assign(static_cast<size_t>(2 * n), -1);
                for (int i = 0; i < n; ++i) {
                    int q = t.match[static_cast<size_t>(i)];
                    d.match[static_cast<size_t>(i)] = q;  // cups stay, throughs land below
                }
                int lo = b, hi = n - 1;
                while (lo < hi) {
                    d.match[static_cast<size_t>(n + lo)] = n + hi;
                    d.match[static_cast<size_t>(n + hi)] = n + lo;
                    ++lo;
                    --hi;
                }
                return d;
            };
            TLDiagram target;
            {
                target.n = n;
                target.match.assign(static_cast<size_t>(2 * n), -1);
                for (int s = 0; s < b; ++s) {
                    target.match[static_cast<size_t>(s)] = n + s;
                    target.match[static_cast<size_t>(n + s)] = s;
                }
                int lo = b, hi = n - 1;
                while (lo < hi) {
                    target.match[static_cast<size_t>(lo)] = hi;
                    target.match[static_cast<size_t>(hi)] = lo;
                    target.match[static_cast<size_t>(n + lo)] = n + hi;
                    target.match[static_cast<size_t>(n + hi)] = n + lo;
                    ++lo;
                    --hi;
                }
            }
            for (const auto& w1 : words) {
                for (const auto& w2 : words) {
                    TLDiagram p1 = pad(word_tangle(w1));
                    TLDiagram p2 = pad(word_tangle(w2));
                    TLDiagram p2t;
                    p2t.n = n;
                    p2t.match.assign(static_cast<size_t>(2 * n), -1);
                    auto flip = [n](int x) { return x < n ? x + n : x - n; };
                    for (int i = 0; i < 2 * n; ++i)
                        p2t.match[static_cast<size_t>(flip(i))] = flip(p2.match[static_cast<size_t>(i)]);
                    auto [comp, loops] = compose(p2t, p1);
                    TLElement<FracLaurent> celt;
                    celt.n = n;
                    FracLaurent cf = one;
                    for (int t = 0; t < loops; ++t) cf = cf * FracLaurent(delta_l());
                    celt.add_term(comp, cf);
                    TLElement<FracLaurent> fb_pad = tl_extend(fb, n - b);
                    TLElement<FracLaurent> sandwich = tl_multiply(tl_multiply(fb_pad, celt, delta), fb_pad, delta);
                    auto it = sandwich.terms.find(target);
                    FracLaurent got = it == sandwich.terms.end() ? FracLaurent(Laurent()) : it->second;
                    CHECK(got == FracLaurent(skein_form(w1, w2)));
                }
            }
        }
    }
}

TEST_CASE("TL action on words") {
    // n=2, b=0: e_1 acts by delta on the single word
    MatX<Laurent> m = tl_rep_on_words(2, 0, 1);
    CHECK(m(0, 0) == delta_l());

    // e_k^2 = delta e_k as matrices
    for (int n : {4, 5}) {
        for (int b = n % 2; b <= n - 2; b += 2) {
            for (int k = 1; k < n; ++k) {
                MatX<Laurent> ek = tl_rep_on_words(n, b, k);
                MatX<Laurent> sq = ek * ek;
                for (Eigen::Index i = 0; i < sq.rows(); ++i)
                    for (Eigen::Index j = 0; j < sq.cols(); ++j) CHECK(sq(i, j) == delta_l() * ek(i, j));
            }
        }
    }

    // braid operators q^{1/2} id + q^{-1/2} e_k satisfy the braid relation
    for (int n : {3, 4}) {
        for (int b = n % 2; b <= n - 2; b += 2) {
            const int d = static_cast<int>(flat_words(n, b).size());
            MatX<Laurent> id = identity_matrix(d, Laurent(), Laurent(1));
            auto sigma = [&](int k) {
                MatX<Laurent> s = tl_rep_on_words(n, b, k);
                for (Eigen::Index i = 0; i < s.rows(); ++i)
                    for (Eigen::Index j = 0; j < s.cols(); ++j) {
                        s(i, j) = Laurent::s_power(-1) * s(i, j);
                        if (i == j) s(i, j) += Laurent::s_power(1);
                    }
                return s;
            };
            for (int k = 1; k + 1 < n; ++k) {
                MatX<Laurent> a = sigma(k), bm = sigma(k + 1);
                MatX<Laurent> lhs = a * bm * a, rhs = bm * a * bm;
                for (Eigen::Index i = 0; i < lhs.rows(); ++i)
                    for (Eigen::Index j = 0; j < lhs.cols(); ++j) CHECK(lhs(i, j) == rhs(i, j));
            }
            (void)id;
        }
    }
}

TEST_CASE("self-adjointness of the TL action for the skein form") {
    // h(e_k u, v) = h(u, e_k v)
    for (int n : {4, 5}) {
        for (int b = n % 2; b <= n - 2; b += 2) {
            auto words = flat_words(n, b);
            const int d = static_cast<int>(words.size());
            for (int k = 1; k < n; ++k) {
                MatX<Laurent> ek = tl_rep_on_words(n, b, k);
                for (int u = 0; u < d; ++u) {
                    for (int v = 0; v < d; ++v) {
                        Laurent lhs, rhs;
                        for (int t = 0; t < d; ++t) {
                            if (!ek(t, u).is_zero()) lhs += ek(t, u) * skein_form(words[static_cast<size_t>(t)], words[static_cast<size_t>(v)]);
                            if (!ek(t, v).is_zero()) rhs += skein_form(words[static_cast<size_t>(u)], words[static_cast<size_t>(t)]) * ek(t, v);
                        }
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("cup-state expansion") {
    // w all dots -> e_0 ⊗ ... ⊗ e_0
    WeightSpace w3 = make_weight_space(5, Kind::FiniteV, {1, 1, 1}, 3);
    FlatWord dots{"..."};
    auto v = word_to_quantum(dots, w3);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Laurent(1));

    // w = "()": -q^{-1/2} e0⊗e1 + q^{1/2} e1⊗e0
    WeightSpace w2 = make_weight_space(5, Kind::FiniteV, {1, 1}, 0);
    FlatWord cup{"()"};
    auto vc = word_to_quantum(cup, w2);
    // tuples lex: (0,1) then (1,0)
    CHECK(vc[0] == -Laurent::s_power(-1));
    CHECK(vc[1] == Laurent::s_power(1));

    // image lies in ker E ∩ ker E^{(r)} of the finite tensor
    for (int n : {4, 5, 6}) {
        TensorAlgebra ones(5, Kind::FiniteV, std::vector<int>(static_cast<size_t>(n), 1));
        for (int b = n % 2; b <= n; b += 2) {
            const WeightSpace& wsp = ones.space(b);
            SparseOpL e1 = ones.op_e(b);
            SparseOpL er = ones.op_e_div(b, 5);
            for (const auto& w : flat_words(n, b)) {
                auto x = word_to_quantum(w, wsp);
                for (const auto& y : e1.apply(x)) CHECK(y.is_zero());
                if (er.rows > 0)
                    for (const auto& y : er.apply(x)) CHECK(y.is_zero());
            }
        }
    }
}

TEST_CASE("class expansion coefficients") {
    // m = 0: single coefficient 1 on the zero tuple
    FlatWord dots{".."};
    auto e0 = cinfty_coefficients(dots);
    REQUIRE(e0.coeffs.size() == 1);
    CHECK(e0.coeffs.begin()->second == Laurent(1));
    CHECK(e0.rescale == Laurent(1));

    // w = "()": {(1,0) -> q^{1/2}, (0,1) -> -q^{-1/2}}
    FlatWord cup{"()"};
    auto ec = cinfty_coefficients(cup);
    REQUIRE(ec.coeffs.size() == 2);
    CHECK(ec.coeffs.at({1, 0}) == Laurent::s_power(1));
    CHECK(ec.coeffs.at({0, 1}) == -Laurent::s_power(-1));
    CHECK(ec.rescale == Laurent::q_power(1) - Laurent::q_power(-1));

    // agreement with the cup-state expansion for all words at n <= 6
    for (int n = 2; n <= 6; ++n) {
        for (int b = n % 2; b <= n; b += 2) {
            WeightSpace wsp = make_weight_space(5, Kind::FiniteV, std::vector<int>(static_cast<size_t>(n), 1), b);
            for (const auto& w : flat_words(n, b)) {
                auto exp = cinfty_coefficients(w);
                auto vec = word_to_quantum(w, wsp);
                for (const auto& [tuple, coeff] : exp.coeffs) {
                    int idx = wsp.index_of(tuple);
                    REQUIRE(idx >= 0);
                    CHECK(vec[static_cast<size_t>(idx)] == coeff);
                }
            }
        }
    }
}

TEST_CASE("normalization exponent bookkeeping") {
    // Swapping the 1 from opener to closer inside one pair changes f by
    // 1 + o - c (in q-units), matching the switch relation.
    for (const auto& w : flat_words(6, 2)) {
        auto ps = w.pairs();
        auto tuples = compatible_tuples(w);
        for (const auto& t : tuples) {
            for (const auto& [o, c] : ps) {
                if (t[static_cast<size_t>(o)] != 1) continue;
                std::vector<int> t2 = t;
                t2[static_cast<size_t>(o)] = 0;
                t2[static_cast<size_t>(c)] = 1;
                int diff = f_exponent_times2(w, t) - f_exponent_times2(w, t2);
                CHECK(diff == 2 * (1 + o - c));
            }
        }
    }
}
