#include "tqft/modules.hpp"

namespace tqft {

namespace {

// (q^a - q^{-a}) = (q - q^{-1})[a]
Laurent q_diff(int a) { return Laurent::q_power(a) - Laurent::q_power(-a); }

}  // namespace

Laurent e_step(Kind kind, int alpha, int m) {
    switch (kind) {
        case Kind::FiniteV:
            return qint(alpha - m + 1);
        case Kind::VermaE:
            return Laurent(1);
        case Kind::VermaFbar:
            // E^{(1)} e_m = [m](q^{alpha+1-m} - q^{-alpha-1+m}) e_{m-1}
            return qint(m) * q_diff(alpha + 1 - m);
    }
    return Laurent();
}

Laurent fbar_step(Kind kind, int alpha, int m) {
    switch (kind) {
        case Kind::FiniteV:
            return q_diff(1) * qint(m + 1);
        case Kind::VermaE:
            // Fbar^{(1)} e_m = [m+1](q^{alpha-m} - q^{-alpha+m}) e_{m+1}
            return qint(m + 1) * q_diff(alpha - m);
        case Kind::VermaFbar:
            return Laurent(1);
    }
    return Laurent();
}

Laurent f_step(Kind kind, int alpha, int m) {
    (void)alpha;
    if (kind != Kind::FiniteV) throw std::invalid_argument("plain F is only defined on the finite modules");
    return qint(m + 1);
}

MatX<Laurent> generator_matrix(const ModuleSpec& spec, Gen g, int l, int level_r) {
    if (l < 0) throw std::invalid_argument("generator_matrix: negative divided power");
    const int d = spec.dim();
    const int alpha = spec.weight;
    MatX<Laurent> m = constant_matrix(d, d, Laurent());
    auto weight_of = [&](int i) { return alpha - 2 * i; };

    switch (g) {
        case Gen::K:
            for (int i = 0; i < d; ++i) m(i, i) = Laurent::q_power(weight_of(i));
            return m;
        case Gen::Kinv:
            for (int i = 0; i < d; ++i) m(i, i) = Laurent::q_power(-weight_of(i));
            return m;
        case Gen::KbinomR:
            if (level_r <= 0) throw std::invalid_argument("KbinomR needs the level");
            for (int i = 0; i < d; ++i) m(i, i) = qbinom(weight_of(i), level_r);
            return m;
        case Gen::E:
            for (int i = 1; i < d; ++i) m(i - 1, i) = e_step(spec.kind, alpha, i);
            return m;
        case Gen::Ediv: {
            if (spec.kind == Kind::VermaE && l >= 2)
                throw std::invalid_argument("divided E powers are not defined on this module kind");
            if (spec.kind == Kind::VermaFbar) {
                // E^{(l)} e_i = qbinom(i, l) prod_{k=1..l} (q^{alpha+k-i} - q^{-alpha-k+i}) e_{i-l}
                for (int i = l; i < d; ++i) {
                    Laurent c = qbinom(i, l);
                    for (int k = 1; k <= l; ++k) c *= q_diff(alpha + k - i);
                    m(i - l, i) = c;
                }
                return m;
            }
            MatX<Laurent> e1 = generator_matrix(spec, Gen::E);
            MatX<Laurent> p = identity_matrix(d, Laurent(), Laurent(1));
            for (int k = 0; k < l; ++k) p = e1 * p;
            const Laurent fact = qfact(l);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m(i, j) = p(i, j).exact_div(fact);
            return m;
        }
        case Gen::F:
            for (int i = 0; i + 1 < d; ++i) m(i + 1, i) = f_step(spec.kind, alpha, i);
            return m;
        case Gen::Fbar: {
            if (spec.kind == Kind::VermaFbar && l >= 2)
                throw std::invalid_argument("divided Fbar powers are not defined on this module kind");
            if (spec.kind == Kind::VermaE) {
                // Fbar^{(l)} e_i = qbinom(i+l, l) prod_{k=0..l-1} (q^{alpha-k-i} - q^{-alpha+k+i}) e_{i+l}
                for (int i = 0; i + l < d; ++i) {
                    Laurent c = qbinom(i + l, l);
                    for (int k = 0; k < l; ++k) c *= q_diff(alpha - k - i);
                    m(i + l, i) = c;
                }
                return m;
            }
            MatX<Laurent> f1 = constant_matrix(d, d, Laurent());
            for (int i = 0; i + 1 < d; ++i) f1(i + 1, i) = fbar_step(spec.kind, alpha, i);
            MatX<Laurent> p = identity_matrix(d, Laurent(), Laurent(1));
            for (int k = 0; k < l; ++k) p = f1 * p;
            const Laurent fact = qfact(l);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) m(i, j) = p(i, j).exact_div(fact);
            return m;
        }
    }
    throw std::logic_error("generator_matrix: unreachable");
}

}  // namespace tqft
