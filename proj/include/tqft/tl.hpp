#pragma once

#include "tqft/cyclotomic.hpp"
#include "tqft/laurent.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tqft {

/// Planar diagram on n+n boundary points: indices 0..n-1 on top,
/// n..2n-1 on the bottom, matched in pairs without crossings.
struct TLDiagram {
    int n = 0;
    std::vector<int> match;  // match[i] = partner of point i

    static TLDiagram identity(int n);
    /// The cup-cap generator joining top (and bottom) points k-1, k (1-based k).
    static TLDiagram cup_cap(int n, int k);

    bool operator<(const TLDiagram& o) const { return match < o.match; }
    bool operator==(const TLDiagram& o) const { return n == o.n && match == o.match; }
};

/// Stack a over b (a's bottom glued to b's top); returns the composite and
/// the number of closed loops formed.
std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b);

/// Horizontal juxtaposition: a in TL_n, b in TL_m giving TL_{n+m}.
TLDiagram side_by_side(const TLDiagram& a, const TLDiagram& b);

/// Formal linear combination of diagrams; no zero terms kept.
template <class C>
struct TLElement {
    int n = 0;
    std::map<TLDiagram, C> terms;

    static TLElement unit(int n, const C& one) {
        TLElement x;
        x.n = n;
        x.terms.emplace(TLDiagram::identity(n), one);
        return x;
    }

    void add_term(const TLDiagram& d, const C& c) {
        auto it = terms.find(d);
        if (it == terms.end()) {
            if (!scalar_is_zero(c)) terms.emplace(d, c);
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    TLElement operator+(const TLElement& o) const {
        TLElement r = *this;
        for (const auto& [d, c] : o.terms) r.add_term(d, c);
        return r;
    }
    TLElement operator-(const TLElement& o) const {
        TLElement r = *this;
        for (const auto& [d, c] : o.terms) r.add_term(d, -c);
        return r;
    }
    TLElement scaled(const C& s) const {
        TLElement r;
        r.n = n;
        for (const auto& [d, c] : terms) r.add_term(d, c * s);
        return r;
    }
    bool operator==(const TLElement& o) const { return n == o.n && terms == o.terms; }
};

/// Diagram product with loop factor delta per closed loop.
template <class C>
TLElement<C> tl_multiply(const TLElement<C>& x, const TLElement<C>& y, const C& delta) {
    if (x.n != y.n) throw std::invalid_argument("tl_multiply: size mismatch");
    TLElement<C> r;
    r.n = x.n;
    for (const auto& [dx, cx] : x.terms) {
        for (const auto& [dy, cy] : y.terms) {
            auto [d, loops] = compose(dx, dy);
            C c = cx * cy;
            for (int i = 0; i < loops; ++i) c = c * delta;
            r.add_term(d, c);
        }
    }
    return r;
}

template <class C>
TLElement<C> tl_extend(const TLElement<C>& x, int extra) {
    TLElement<C> r;
    r.n = x.n + extra;
    TLDiagram id = TLDiagram::identity(extra);
    for (const auto& [d, c] : x.terms) r.add_term(side_by_side(d, id), c);
    return r;
}

/// Jones-Wenzl projector by the inductive formula
/// f_{k+1} = f_k x id + ([k]/[k+1]) (f_k x 1) e_k (f_k x 1).
/// The coefficient ring must invert [2], ..., [n]; `qi` supplies [k] and
/// division must throw on a non-invertible denominator.
template <class C>
TLElement<C> jones_wenzl(int n, const C& one, const C& delta,
                         const std::function<C(int)>& qi, const std::function<C(const C&, const C&)>& div) {
    if (n < 0) throw std::invalid_argument("jones_wenzl: negative index");
    TLElement<C> f = TLElement<C>::unit(0, one);
    for (int k = 0; k < n; ++k) {
        TLElement<C> fx = tl_extend(f, 1);
        if (k == 0) {
            f = fx;
            continue;
        }
        TLElement<C> ek = TLElement<C>::unit(k + 1, one);
        ek.terms.clear();
        ek.add_term(TLDiagram::cup_cap(k + 1, k), one);
        TLElement<C> mid = tl_multiply(tl_multiply(fx, ek, delta), fx, delta);
        f = fx + mid.scaled(div(qi(k), qi(k + 1)));
    }
    return f;
}

/// Rational function in s = q^{1/2}: quotient of Laurent polynomials in
/// canonical form (denominator a polynomial with unit content, constant
/// term nonzero, positive leading coefficient convention via monic top).
class FracLaurent {
  public:
    FracLaurent() : num_(), den_(Laurent(1)) {}
    FracLaurent(const Laurent& n) : num_(n), den_(Laurent(1)) {}
    explicit FracLaurent(long n) : num_(Laurent(n)), den_(Laurent(1)) {}
    FracLaurent(Laurent n, Laurent d);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend FracLaurent operator+(const FracLaurent& a, const FracLaurent& b) {
        return FracLaurent(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FracLaurent operator-(const FracLaurent& a, const FracLaurent& b) {
        return FracLaurent(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FracLaurent operator*(const FracLaurent& a, const FracLaurent& b) {
        return FracLaurent(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FracLaurent operator/(const FracLaurent& a, const FracLaurent& b) {
        if (b.is_zero()) throw std::domain_error("FracLaurent: division by zero");
        return FracLaurent(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend FracLaurent operator-(const FracLaurent& a) { return FracLaurent(-a.num_, a.den_); }
    friend bool operator==(const FracLaurent& a, const FracLaurent& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    Laurent num_, den_;
};

inline bool scalar_is_zero(const FracLaurent& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Laurent& x) { return x.is_zero(); }

}  // namespace tqft
