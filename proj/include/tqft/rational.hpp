#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace tqft {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational scalar_inv(const Rational& x) { return Rational(1) / x; }

/// Parse an exact rational from "p", "-p" or "p/q" form.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    x.canonicalize();
    return x;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace tqft

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
