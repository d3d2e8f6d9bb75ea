#pragma once

#include "tqft/laurent.hpp"
#include "tqft/matrix.hpp"

#include <stdexcept>

namespace tqft {

/// The three module families appearing in the construction. FiniteV is the
/// (alpha+1)-dimensional module; the Verma kinds are truncated to a finite
/// weight window large enough for the computation at hand.
enum class Kind { FiniteV, VermaE, VermaFbar };

struct ModuleSpec {
    Kind kind = Kind::FiniteV;
    int weight = 0;      // highest weight alpha
    int truncation = 0;  // max basis index kept for Verma kinds

    int dim() const { return (kind == Kind::FiniteV ? weight : truncation) + 1; }
};

enum class Gen {
    K,
    Kinv,
    KbinomR,  // [K; r], diagonal with entries qbinom(weight of the vector, r)
    E,        // degree-one raising generator of the kind
    Ediv,     // E^{(l)}
    F,        // plain F (FiniteV only)
    Fbar,     // Fbar^{(l)}; l = 1 is the degree-one lowering generator
};

/// Action matrix of a generator on a single module, over the Laurent ring in
/// s = q^{1/2}. Divided powers use the closed-form tables of the kind where
/// the integral form provides them; combinations outside the defining
/// subalgebra of the kind are rejected.
MatX<Laurent> generator_matrix(const ModuleSpec& spec, Gen g, int l = 1, int level_r = 0);

/// Per-slot structure coefficients used to assemble tensor operators.
/// e_step: coefficient of e_{m-1} in (degree-one raising) e_m.
/// fbar_step: coefficient of e_{m+1} in Fbar^{(1)} e_m.
Laurent e_step(Kind kind, int alpha, int m);
Laurent fbar_step(Kind kind, int alpha, int m);
Laurent f_step(Kind kind, int alpha, int m);  // plain F, FiniteV only

}  // namespace tqft
