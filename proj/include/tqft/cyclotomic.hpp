#pragma once

#include "tqft/laurent.hpp"
#include "tqft/rational.hpp"

#include <Eigen/Core>

#include <complex>
#include <string>
#include <vector>

namespace tqft {

/// Shared immutable context for Q(ζ_r): the r-th cyclotomic polynomial and
/// the reduction/conjugation tables in the power basis ζ^0..ζ^{φ(r)-1}.
/// Instances are interned per level and never mutated after construction.
class CycField {
  public:
    static const CycField& get(int r);

    int level() const { return r_; }
    int degree() const { return phi_; }

    /// ζ^k (any integer k) reduced into the power basis.
    const std::vector<Integer>& zeta_power(int k) const {
        int m = k % r_;
        if (m < 0) m += r_;
        return zeta_pow_[static_cast<size_t>(m)];
    }

    /// Coefficients of Φ_r (degree φ(r), monic, over Z).
    const std::vector<Integer>& minimal_polynomial() const { return phi_poly_; }

  private:
    explicit CycField(int r);

    int r_ = 0;
    int phi_ = 0;
    std::vector<Integer> phi_poly_;                 // size phi_+1
    std::vector<std::vector<Integer>> zeta_pow_;    // r rows of size phi_
};

/// Element of Q(ζ_r) in canonical form: fully reduced power-basis
/// coordinates of length φ(r). Equality is coefficient-wise.
class CycNum {
  public:
    /// Field-less rational literal; promoted to a concrete field on first
    /// contact with a fielded operand. Lets the type serve as a matrix
    /// scalar, where kernels construct Scalar(0) and Scalar(1).
    CycNum() = default;
    CycNum(int v) : lit_(v) {}  // NOLINT: implicit by design
    explicit CycNum(const CycField& f) : field_(&f), c_(static_cast<size_t>(f.degree())) {}
    CycNum(const CycField& f, const Rational& x) : CycNum(f) {
        if (f.degree() > 0) c_[0] = x;
    }

    static CycNum zero(const CycField& f) { return CycNum(f); }
    static CycNum one(const CycField& f) { return CycNum(f, Rational(1)); }
    static CycNum zeta(const CycField& f, int k = 1);

    bool has_field() const { return field_ != nullptr; }
    const CycField& field() const { return *field_; }
    int level() const { return field_->level(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Literal promoted into a field.
    CycNum in_field(const CycField& f) const {
        if (field_) return *this;
        return CycNum(f, lit_);
    }

    bool is_zero() const {
        if (!field_) return tqft::is_zero(lit_);
        for (const auto& x : c_)
            if (!tqft::is_zero(x)) return false;
        return true;
    }
    bool is_one() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Galois conjugation ζ ↦ ζ^{-1}; an involutive ring automorphism.
    CycNum conj() const { return has_field() ? galois(level() - 1) : *this; }
    /// Galois map ζ ↦ ζ^k for gcd(k, r) = 1.
    CycNum galois(int k) const;

    /// Multiplicative inverse via extended gcd with Φ_r over Q.
    CycNum inverse() const;

    /// True if every coordinate is an integer (membership in Z[ζ_r] in the
    /// power basis; for prime r this is exactly the ring of integers test).
    bool is_integral() const;

    /// Numerical embedding ζ ↦ exp(2πik/r); requires gcd(k, r) = 1.
    std::complex<double> embed(int k) const;

    std::string str() const;

    /// Scale by rational.
    friend CycNum operator*(const Rational& a, CycNum b) {
        for (auto& x : b.c_) x *= a;
        return b;
    }

  private:
    friend CycNum specialize(const Laurent&, int);
    friend class CycInt;

    const CycField* field_ = nullptr;
    std::vector<Rational> c_;
    Rational lit_;  // value while field-less
};

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

inline bool scalar_is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum scalar_inv(const CycNum& x) { return x.inverse(); }

/// Specialize a Laurent polynomial in s = q^{1/2} at s = -ζ_r.
CycNum specialize(const Laurent& x, int r);

/// gcd(a, b) for plain machine ints.
inline int gcd_int(int a, int b) {
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

/// Element of Z[ζ_r]: same basis, integer coordinates.
class CycInt {
  public:
    CycInt() = default;
    explicit CycInt(const CycField& f) : field_(&f), c_(static_cast<size_t>(f.degree())) {}

    static CycInt from(const CycNum& x);
    CycNum to_cyc() const;

    const CycField& field() const { return *field_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer& operator[](size_t i) { return c_[i]; }
    const Integer& operator[](size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) {
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend CycInt operator-(CycInt a, const CycInt& b) {
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

  private:
    const CycField* field_ = nullptr;
    std::vector<Integer> c_;
};

}  // namespace tqft

namespace Eigen {

template <>
struct NumTraits<tqft::CycNum> : GenericNumTraits<tqft::CycNum> {
    typedef tqft::CycNum Real;
    typedef tqft::CycNum NonInteger;
    typedef tqft::CycNum Nested;
    typedef tqft::CycNum Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 300,
        MulCost = 1000,
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
