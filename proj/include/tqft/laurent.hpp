#pragma once

#include "tqft/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqft {

/// Laurent polynomial in s = q^{1/2} with rational coefficients.
///
/// This is the universal coefficient ring of the whole construction: every
/// operator entry is assembled here, where division by quantum factorials is
/// still exact, and only specialized to a root of unity at the very end.
/// Exponents are exponents of s, so q^k is monomial(2k) and q^{k/2} with k odd
/// is monomial(k).
class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Rational& c) {
        if (!tqft::is_zero(c)) coeffs_[0] = c;
    }
    explicit Laurent(long n) : Laurent(Rational(n)) {}

    static Laurent monomial(int s_exp, const Rational& c = Rational(1)) {
        Laurent x;
        if (!tqft::is_zero(c)) x.coeffs_[s_exp] = c;
        return x;
    }
    /// q^k as an element of Z[s^{±1}].
    static Laurent q_power(int k) { return monomial(2 * k); }
    /// s^k = q^{k/2}.
    static Laurent s_power(int k) { return monomial(k); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int s_exp) const {
        auto it = coeffs_.find(s_exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    int low_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int high_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(unsigned n) const {
        Laurent r(1);
        Laurent base = *this;
        while (n) {
            if (n & 1) r *= base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// The bar involution s ↦ s^{-1}.
    Laurent conj() const {
        Laurent r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    /// Exact quotient by d. Throws if the division leaves a remainder;
    /// a remainder here always means an arithmetic bug upstream.
    Laurent exact_div(const Laurent& d) const;

    std::string str() const;

  private:
    void add_term(int e, const Rational& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (!tqft::is_zero(c)) coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (tqft::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::map<int, Rational> coeffs_;  // no zero entries
};

inline Laurent Laurent::exact_div(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
    if (is_zero()) return Laurent();
    // Shift both to honest polynomials and long-divide.
    const int shift_n = low_exp(), shift_d = d.low_exp();
    std::vector<Rational> num(static_cast<size_t>(high_exp() - shift_n) + 1);
    std::vector<Rational> den(static_cast<size_t>(d.high_exp() - shift_d) + 1);
    for (const auto& [e, c] : coeffs_) num[static_cast<size_t>(e - shift_n)] = c;
    for (const auto& [e, c] : d.coeffs_) den[static_cast<size_t>(e - shift_d)] = c;
    if (num.size() < den.size()) throw std::domain_error("Laurent: non-exact division");
    std::vector<Rational> quot(num.size() - den.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        Rational c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (tqft::is_zero(c)) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (!tqft::is_zero(r)) throw std::domain_error("Laurent: non-exact division");
    Laurent out;
    for (size_t i = 0; i < quot.size(); ++i)
        if (!tqft::is_zero(quot[i])) out.coeffs_[static_cast<int>(i) + shift_n - shift_d] = quot[i];
    return out;
}

inline std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*s^" << e;
    }
    return os.str();
}

/// Balanced quantum integer [n] = (q^n - q^{-n})/(q - q^{-1}).
inline Laurent qint(int n) {
    Laurent r;
    if (n == 0) return r;
    const int a = n > 0 ? n : -n;
    for (int k = 0; k < a; ++k) r += Laurent::s_power(2 * (a - 1 - 2 * k));
    return n > 0 ? r : -r;
}

/// [n]! = [n][n-1]...[1].
inline Laurent qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    Laurent r(1);
    for (int k = 2; k <= n; ++k) r *= qint(k);
    return r;
}

/// Quantum binomial [m][m-1]...[m-n+1] / [n]!, exact in the Laurent ring.
inline Laurent qbinom(int m, int n) {
    if (n < 0) throw std::invalid_argument("qbinom: negative lower argument");
    Laurent num(1);
    for (int k = 0; k < n; ++k) num *= qint(m - k);
    return num.exact_div(qfact(n));
}

}  // namespace tqft

namespace Eigen {

template <>
struct NumTraits<tqft::Laurent> : GenericNumTraits<tqft::Laurent> {
    typedef tqft::Laurent Real;
    typedef tqft::Laurent NonInteger;
    typedef tqft::Laurent Nested;
    typedef tqft::Laurent Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 200,
        MulCost = 400,
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
