#include "tqft/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tqft {

namespace {

// Exact division of integer polynomials, used to build Φ_r recursively.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num, const std::vector<Integer>& den) {
    std::vector<Integer> n = num;
    std::vector<Integer> q(n.size() - den.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        Integer c = n[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) n[i + j] -= c * den[j];
    }
    for (const auto& rem : n)
        if (sgn(rem) != 0) throw std::logic_error("cyclotomic: non-exact polynomial division");
    return q;
}

std::vector<Integer> cyclotomic_poly(int n) {
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    std::vector<Integer> p(static_cast<size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = poly_div_exact(p, cyclotomic_poly(d));
    }
    return p;
}

}  // namespace

CycField::CycField(int r) : r_(r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("CycField: level must be odd and >= 3");
    phi_poly_ = cyclotomic_poly(r);
    phi_ = static_cast<int>(phi_poly_.size()) - 1;
    // Rows of ζ^m in the power basis for m = 0..r-1, by repeated reduction.
    zeta_pow_.assign(static_cast<size_t>(r_), std::vector<Integer>(static_cast<size_t>(phi_)));
    std::vector<Integer> cur(static_cast<size_t>(phi_));
    cur[0] = 1;
    for (int m = 0; m < r_; ++m) {
        zeta_pow_[static_cast<size_t>(m)] = cur;
        // Multiply by x modulo Φ_r.
        Integer top = cur[static_cast<size_t>(phi_ - 1)];
        for (int i = phi_ - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        if (sgn(top) != 0)
            for (int i = 0; i < phi_; ++i) cur[static_cast<size_t>(i)] -= top * phi_poly_[static_cast<size_t>(i)];
    }
}

const CycField& CycField::get(int r) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(r);
    if (it == registry.end()) it = registry.emplace(r, std::unique_ptr<CycField>(new CycField(r))).first;
    return *it->second;
}

CycNum CycNum::zeta(const CycField& f, int k) {
    CycNum x(f);
    const auto& row = f.zeta_power(k);
    for (int i = 0; i < f.degree(); ++i) x.c_[static_cast<size_t>(i)] = Rational(row[static_cast<size_t>(i)]);
    return x;
}

bool CycNum::is_one() const {
    if (!field_) return lit_ == 1;
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!tqft::is_zero(c_[i])) return false;
    return true;
}

CycNum CycNum::operator-() const {
    CycNum x = *this;
    if (!x.field_) {
        x.lit_ = -x.lit_;
        return x;
    }
    for (auto& v : x.c_) v = -v;
    return x;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (!field_ && !o.field_) {
        lit_ += o.lit_;
        return *this;
    }
    if (!field_) *this = in_field(o.field());
    if (!o.field_) {
        c_[0] += o.lit_;
        return *this;
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    return *this += -o;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (!a.field_ && !b.field_) {
        CycNum out;
        out.lit_ = a.lit_ * b.lit_;
        return out;
    }
    if (!a.field_) return a.in_field(b.field()) * b;
    if (!b.field_) {
        // rational scaling, no convolution needed
        CycNum out = a;
        for (auto& v : out.c_) v *= b.lit_;
        return out;
    }
    const CycField& f = a.field();
    const int d = f.degree();
    std::vector<Rational> prod(static_cast<size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i) {
        if (tqft::is_zero(a.c_[static_cast<size_t>(i)])) continue;
        for (int j = 0; j < d; ++j) {
            if (tqft::is_zero(b.c_[static_cast<size_t>(j)])) continue;
            prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    CycNum out(f);
    for (int e = 0; e < 2 * d - 1; ++e) {
        const Rational& p = prod[static_cast<size_t>(e)];
        if (tqft::is_zero(p)) continue;
        if (e < d) {
            out.c_[static_cast<size_t>(e)] += p;
        } else {
            const auto& row = f.zeta_power(e);
            for (int i = 0; i < d; ++i)
                if (sgn(row[static_cast<size_t>(i)]) != 0) out.c_[static_cast<size_t>(i)] += p * row[static_cast<size_t>(i)];
        }
    }
    return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (!a.field_ && !b.field_) return a.lit_ == b.lit_;
    if (!a.field_) return a.in_field(b.field()) == b;
    if (!b.field_) return a == b.in_field(a.field());
    if (a.field_ != b.field_) return a.level() == b.level() && a.c_ == b.c_;
    return a.c_ == b.c_;
}

CycNum CycNum::galois(int k) const {
    if (!field_) return *this;  // rationals are Galois-fixed
    const CycField& f = field();
    if (gcd_int(k, f.level()) != 1) throw std::invalid_argument("galois: exponent not coprime to level");
    CycNum out(f);
    for (int i = 0; i < f.degree(); ++i) {
        if (tqft::is_zero(c_[static_cast<size_t>(i)])) continue;
        const auto& row = f.zeta_power(i * k);
        for (int j = 0; j < f.degree(); ++j)
            if (sgn(row[static_cast<size_t>(j)]) != 0)
                out.c_[static_cast<size_t>(j)] += c_[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    }
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: division by zero");
    if (!field_) {
        CycNum out;
        out.lit_ = 1 / lit_;
        return out;
    }
    const CycField& f = field();
    const int d = f.degree();
    // Extended Euclid in Q[x] for (this, Φ_r): u*this + v*Φ_r = gcd = const.
    std::vector<Rational> r0(static_cast<size_t>(d) + 1), r1(c_.begin(), c_.end());
    for (int i = 0; i <= d; ++i) r0[static_cast<size_t>(i)] = Rational(f.minimal_polynomial()[static_cast<size_t>(i)]);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients on `this`
    auto deg = [](const std::vector<Rational>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (!tqft::is_zero(p[i])) return static_cast<int>(i);
        return -1;
    };
    auto trim = [&](std::vector<Rational>& p) { p.resize(static_cast<size_t>(deg(p) + 1)); };
    trim(r1);
    while (deg(r1) > 0) {
        // r0 = q*r1 + rem
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(static_cast<size_t>(deg(r0) - deg(r1) + 1));
        while (deg(rem) >= deg(r1)) {
            int k = deg(rem) - deg(r1);
            Rational c = rem[static_cast<size_t>(deg(rem))] / r1[static_cast<size_t>(deg(r1))];
            q[static_cast<size_t>(k)] += c;
            for (int i = 0; i <= deg(r1); ++i) rem[static_cast<size_t>(i + k)] -= c * r1[static_cast<size_t>(i)];
            trim(rem);
            if (rem.empty()) break;
        }
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw std::logic_error("CycNum: gcd with minimal polynomial is not constant");
    }
    Rational g = r1[0];
    CycNum out(f);
    for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / g;
    return out;
}

bool CycNum::is_integral() const {
    if (!field_) return lit_.get_den() == 1;
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

std::complex<double> CycNum::embed(int k) const {
    if (!field_) return {lit_.get_d(), 0.0};
    const int r = level();
    if (gcd_int(k, r) != 1) throw std::invalid_argument("embed: k not coprime to r");
    std::complex<double> z(0.0, 0.0);
    for (int i = 0; i < field().degree(); ++i) {
        if (tqft::is_zero(c_[static_cast<size_t>(i)])) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * i) % r) / r;
        z += c_[static_cast<size_t>(i)].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::string CycNum::str() const {
    if (!field_) return lit_.get_str();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "]_" << level();
    return os.str();
}

CycNum specialize(const Laurent& x, int r) {
    const CycField& f = CycField::get(r);
    CycNum out(f);
    for (const auto& [e, c] : x.coeffs()) {
        // s^e = (-ζ)^e = (-1)^e ζ^e
        const auto& row = f.zeta_power(e);
        const bool neg = (e % 2) != 0;
        for (int i = 0; i < f.degree(); ++i) {
            if (sgn(row[static_cast<size_t>(i)]) == 0) continue;
            Rational t = c * row[static_cast<size_t>(i)];
            if (neg) t = -t;
            out.c_[static_cast<size_t>(i)] += t;
        }
    }
    return out;
}

CycInt CycInt::from(const CycNum& x) {
    CycInt out(x.field());
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rational& c = x.coeffs()[i];
        if (c.get_den() != 1) throw std::domain_error("CycInt: non-integral coordinate");
        out.c_[i] = c.get_num();
    }
    return out;
}

CycNum CycInt::to_cyc() const {
    CycNum out(*field_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = Rational(c_[i]);
    return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    const CycField& f = *a.field_;
    const int d = f.degree();
    std::vector<Integer> prod(static_cast<size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (sgn(a.c_[static_cast<size_t>(i)]) != 0 && sgn(b.c_[static_cast<size_t>(j)]) != 0)
                prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    CycInt out(f);
    for (int e = 0; e < 2 * d - 1; ++e) {
        if (sgn(prod[static_cast<size_t>(e)]) == 0) continue;
        const auto& row = f.zeta_power(e);
        for (int i = 0; i < d; ++i) out.c_[static_cast<size_t>(i)] += prod[static_cast<size_t>(e)] * row[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace tqft
