#include "tqft/tl.hpp"

namespace tqft {

TLDiagram TLDiagram::identity(int n) {
    TLDiagram d;
    d.n = n;
    d.match.resize(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        d.match[static_cast<size_t>(i)] = n + i;
        d.match[static_cast<size_t>(n + i)] = i;
    }
    return d;
}

TLDiagram TLDiagram::cup_cap(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("cup_cap: generator index out of range");
    TLDiagram d = identity(n);
    // Top points k-1, k joined; bottom points k-1, k joined.
    d.match[static_cast<size_t>(k - 1)] = k;
    d.match[static_cast<size_t>(k)] = k - 1;
    d.match[static_cast<size_t>(n + k - 1)] = n + k;
    d.match[static_cast<size_t>(n + k)] = n + k - 1;
    return d;
}

std::pair<TLDiagram, int> compose(const TLDiagram& a, const TLDiagram& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: size mismatch");
    const int n = a.n;
    // Boundary points of the composite: a-top (0..n-1), b-bottom (n..2n-1).
    // Interface: a-bottom i <-> b-top i.
    TLDiagram out;
    out.n = n;
    out.match.assign(static_cast<size_t>(2 * n), -1);

    auto trace = [&](int start_in_a, bool start_top_a) {
        // Walk from a boundary point to the other end of its strand.
        bool in_a = start_top_a;
        int p = start_in_a;
        while (true) {
            if (in_a) {
                int q = a.match[static_cast<size_t>(p)];
                if (q < n) return q;  // ended on a-top
                p = q - n;            // crossed to b-top
                in_a = false;
            } else {
                int q = b.match[static_cast<size_t>(p)];
                if (q >= n) return 2 * n + (q - n);  // ended on b-bottom (sentinel offset)
                p = q + n;                           // crossed back into a-bottom
                in_a = true;
            }
        }
    };

    for (int i = 0; i < n; ++i) {
        if (out.match[static_cast<size_t>(i)] >= 0) continue;
        int end = trace(i, true);
        int e = end >= 2 * n ? (end - 2 * n) + n : end;
        out.match[static_cast<size_t>(i)] = e;
        out.match[static_cast<size_t>(e)] = i;
    }
    for (int i = 0; i < n; ++i) {
        int bi = n + i;
        if (out.match[static_cast<size_t>(bi)] >= 0) continue;
        // Starts on b-bottom: walk from b side.
        bool in_a = false;
        int p = i;
        int q = b.match[static_cast<size_t>(p)];
        int end;
        if (q >= n) {
            end = n + (q - n);
        } else {
            p = q + n;
            in_a = true;
            while (true) {
                if (in_a) {
                    int t = a.match[static_cast<size_t>(p)];
                    if (t < n) {
                        end = t;
                        break;
                    }
                    p = t - n;
                    in_a = false;
                } else {
                    int t = b.match[static_cast<size_t>(p)];
                    if (t >= n) {
                        end = n + (t - n);
                        break;
                    }
                    p = t + n;
                    in_a = true;
                }
            }
        }
        out.match[static_cast<size_t>(bi)] = end;
        out.match[static_cast<size_t>(end)] = bi;
    }

    // Loops: interface strands never reaching the outer boundary.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int loops = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        // Follow the cycle through a-bottom/b-top point i.
        int p = i;
        bool closed = true;
        std::vector<int> visited;
        while (true) {
            if (seen[static_cast<size_t>(p)]) break;
            visited.push_back(p);
            seen[static_cast<size_t>(p)] = 1;
            int q = a.match[static_cast<size_t>(n + p)];  // from a-bottom p
            if (q < n) {
                closed = false;  // reaches a-top
                break;
            }
            int s = b.match[static_cast<size_t>(q - n)];  // continue from b-top
            if (s >= n) {
                closed = false;  // reaches b-bottom
                break;
            }
            p = s;
        }
        if (closed && !visited.empty()) ++loops;
    }
    return {out, loops};
}

TLDiagram side_by_side(const TLDiagram& a, const TLDiagram& b) {
    TLDiagram d;
    d.n = a.n + b.n;
    d.match.resize(static_cast<size_t>(2 * d.n));
    auto map_a = [&](int i) { return i < a.n ? i : i + b.n; };
    auto map_b = [&](int i) { return i < b.n ? i + a.n : i + a.n + a.n; };
    for (int i = 0; i < 2 * a.n; ++i) d.match[static_cast<size_t>(map_a(i))] = map_a(a.match[static_cast<size_t>(i)]);
    for (int i = 0; i < 2 * b.n; ++i) d.match[static_cast<size_t>(map_b(i))] = map_b(b.match[static_cast<size_t>(i)]);
    return d;
}

namespace {

// gcd in Q[s] after shifting Laurent polynomials to honest polynomials.
Laurent poly_gcd(Laurent a, Laurent b) {
    auto shift0 = [](const Laurent& x) {
        return x.is_zero() ? x : Laurent::s_power(-x.low_exp()) * x;
    };
    a = shift0(a);
    b = shift0(b);
    while (!b.is_zero()) {
        Laurent r = a;
        while (!r.is_zero() && r.high_exp() >= b.high_exp()) {
            Rational c = r.coeff(r.high_exp()) / b.coeff(b.high_exp());
            r -= Laurent::monomial(r.high_exp() - b.high_exp(), c) * b;
        }
        a = b;
        b = shift0(r);
    }
    if (a.is_zero()) return a;
    // Normalize: monic in the top coefficient.
    return a.exact_div(Laurent(Rational(a.coeff(a.high_exp()))));
}

}  // namespace

FracLaurent::FracLaurent(Laurent n, Laurent d) {
    if (d.is_zero()) throw std::domain_error("FracLaurent: zero denominator");
    if (n.is_zero()) {
        num_ = Laurent();
        den_ = Laurent(1);
        return;
    }
    Laurent g = poly_gcd(n, d);
    if (!g.is_zero() && !(g == Laurent(1))) {
        // gcd is defined up to s-powers; exact_div handles the shift.
        n = n.exact_div(g);
        d = d.exact_div(g);
    }
    // Canonical form: denominator with lowest exponent 0 and top coefficient 1.
    int shift = d.low_exp();
    n = Laurent::s_power(-shift) * n;
    d = Laurent::s_power(-shift) * d;
    Rational lead = d.coeff(d.high_exp());
    num_ = n.exact_div(Laurent(lead));
    den_ = d.exact_div(Laurent(lead));
}

}  // namespace tqft
