#pragma once

#include "tqft/modular.hpp"
#include "tqft/weightspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tqft {

/// One TQFT block: a disk with outer color and inner colors at level r.
struct ColoredDisk {
    int r = 5;
    int outer = 0;
    std::vector<int> colors;

    int color_sum() const {
        int s = 0;
        for (int a : colors) s += a;
        return s;
    }
    /// Weight drop; negative when not a non-negative integer (empty block).
    int drop() const {
        int s = color_sum() - outer;
        return (s < 0 || s % 2 != 0) ? -1 : s / 2;
    }
};

/// Columns span ker E ∩ ker E^{(r)} in the weight-b space of the lowering
/// Verma tensor; canonical unit-pattern basis over Q(ζ_r).
MatX<CycNum> highest_weight_space(const ColoredDisk& disk);

/// Presentation of the coinvariant quotient of the raising Verma tensor by
/// im Fbar^{(1)} + im Fbar^{(r)}: canonical image basis with unit rows at
/// `pivot_rows`, quotient coordinates at the complementary rows.
struct CoinvariantPresentation {
    int space_dim = 0;
    MatX<CycNum> image_basis;     // space_dim x rank, reduced column echelon
    std::vector<int> pivot_rows;  // increasing
    std::vector<int> coord_rows;  // complement, increasing; quotient coordinates

    int quotient_dim() const { return static_cast<int>(coord_rows.size()); }
    /// Apply the projection onto the quotient coordinates to dense columns.
    MatX<CycNum> project(const MatX<CycNum>& x, const CycField& f) const;
    /// The projection as an explicit (quotient_dim x space_dim) matrix.
    MatX<CycNum> matrix(const CycField& f) const;
};

CoinvariantPresentation coinvariant_presentation(const ColoredDisk& disk);

/// Diagonal entries of the slotwise reduction map between the two Verma
/// tensors, on the tuple basis of the weight-b space.
/// Per slot: (q - q^{-1})^k [k]! prod_{j<k} [a - j].
Laurent red_coefficient(int alpha, int k);
std::vector<CycNum> red_diagonal(const ColoredDisk& disk);

/// The assembled block.
struct QuantumBlock {
    ColoredDisk disk;
    int dimension = 0;
    MatX<CycNum> hw_basis;             // D x h
    CoinvariantPresentation coinv;     // quotient data on the raising side
    std::vector<CycNum> red_diag;      // D entries
    MatX<CycNum> image_basis;          // quotient_dim x dimension, canonical
    std::vector<int> image_pivot_rows;
    MatX<CycNum> sections;             // h x dimension: hw preimages of image_basis

    const WeightSpace& weight_space(Kind kind) const;

    /// Composite map hw coords -> quotient coords (projection ∘ red).
    MatX<CycNum> composite() const;

  private:
    mutable std::optional<WeightSpace> wspace_f_, wspace_e_;
};

QuantumBlock quantum_block(const ColoredDisk& disk);

/// Diagonal of the duality pairing between the two Verma tensor weight
/// spaces: q^{f(k)} with f(k) = sum_{i != j} a_i k_j - 2 sum_{i<j} k_i k_j.
std::vector<CycNum> pairing_diagonal(const ColoredDisk& disk);

/// Embedding of the weight module with highest weight n into the n-fold
/// tensor power of the two-dimensional module: columns are the divided
/// F-power orbit of the top vector, e_j -> F^{(j)} e_0^{⊗n}.
/// jw_embed(n).col(j) lives in the weight space of drop j.
struct JwMaps {
    int n = 0;
    int level = 0;
    std::vector<std::vector<Laurent>> embed_cols;    // column j: coords in W(n-2j)
    std::vector<std::vector<CycNum>> project_rows;   // row j: functional on W(n-2j); the
                                                     // normalization divides by quantum
                                                     // integers, so it lives at the level
};
JwMaps jw_maps(int n, int level);

/// Matrix of the embedding/projection restricted to one weight space,
/// specialized at the level (identity-sized for n=1).
MatX<CycNum> jw_embed_matrix(int n, int level, int drop);
MatX<CycNum> jw_project_matrix(int n, int level, int drop);

/// Gram matrix of the geometric intersection form s_D on the canonical
/// image basis, sesquilinear with conjugation on the first argument:
/// s(x, y) = x^dagger G y in block coordinates. Built through the all-one
/// reduction: sections are embedded into the tensor power of the
/// two-dimensional module and expanded over the flat-word spanning set.
MatX<CycNum> induced_form(const QuantumBlock& block);

/// (q - q^{-1})^{-m} times induced_form: the hermitian form the skein side
/// defines directly.
MatX<CycNum> hermitian_form(const QuantumBlock& block);

/// Embed one Verma-lowering-side hw vector (coords in the weight-b tuple
/// basis) into the corresponding weight space of V_1^{⊗(sum of colors)}:
/// per slot, the finite-module normalization followed by jw_embed.
std::vector<CycNum> embed_into_ones(const ColoredDisk& disk, const std::vector<CycNum>& hw_vec);

}  // namespace tqft
