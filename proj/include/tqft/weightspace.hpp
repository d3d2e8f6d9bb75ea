#pragma once

#include "tqft/laurent.hpp"
#include "tqft/matrix.hpp"
#include "tqft/modular.hpp"
#include "tqft/modules.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tqft {

/// Sparse operator over the Laurent ring, column-major like SparseMat.
struct SparseOpL {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Laurent>>> col;

    SparseOpL() = default;
    SparseOpL(int r, int c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}

    void add(int r, int c, Laurent v) {
        if (!v.is_zero()) col[static_cast<size_t>(c)].emplace_back(r, std::move(v));
    }

    SparseMat specialize_at(int level) const;
    MatX<Laurent> to_dense() const;

    /// Composition this∘other (apply `other` first).
    friend SparseOpL operator*(const SparseOpL& a, const SparseOpL& b);

    /// Entrywise exact division.
    SparseOpL exact_div(const Laurent& d) const;

    std::vector<Laurent> apply(const std::vector<Laurent>& x) const;
};

/// Weight-b subspace of a tensor product of n modules of one kind, with the
/// fixed lexicographic tuple basis. For Verma kinds the tuples are all
/// compositions of the weight drop m; for the finite kind each entry is also
/// bounded by its color.
struct WeightSpace {
    int r = 0;
    Kind kind = Kind::FiniteV;
    std::vector<int> colors;
    int outer = 0;  // b
    int m = -1;     // weight drop; -1 marks a non-integral (empty) space
    std::vector<std::vector<int>> tuples;

    int dim() const { return static_cast<int>(tuples.size()); }
    int index_of(const std::vector<int>& t) const;
};

WeightSpace make_weight_space(int r, Kind kind, const std::vector<int>& colors, int outer);

/// All weight spaces of one tensor product, built on demand, together with
/// the tensor operators between them. Everything is assembled over the
/// Laurent ring; divided powers on tensor spaces are matrix powers divided
/// entrywise by [l]!.
class TensorAlgebra {
  public:
    TensorAlgebra(int r, Kind kind, std::vector<int> colors);

    int level() const { return r_; }
    Kind kind() const { return kind_; }
    const std::vector<int>& colors() const { return colors_; }
    int color_sum() const { return color_sum_; }

    const WeightSpace& space(int b) const;

    /// Degree-one raising operator, coproduct-expanded over slots [lo, hi):
    /// W(b) -> W(b+2). Defaults to all slots.
    SparseOpL op_e(int b, int lo = 0, int hi = -1) const;
    /// Degree-one lowering operator Fbar^{(1)}: W(b) -> W(b-2).
    SparseOpL op_fbar(int b, int lo = 0, int hi = -1) const;
    /// Plain F (finite kind only): W(b) -> W(b-2).
    SparseOpL op_f(int b, int lo = 0, int hi = -1) const;

    /// E^{(l)}: W(b) -> W(b+2l), matrix power with exact division by [l]!.
    SparseOpL op_e_div(int b, int l) const;
    /// Fbar^{(l)}: W(b) -> W(b-2l), same construction.
    SparseOpL op_fbar_div(int b, int l) const;
    /// F^{(l)} (finite kind): W(b) -> W(b-2l).
    SparseOpL op_f_div(int b, int l) const;

    /// K acts on W(b) by the scalar q^b.
    Laurent k_scalar(int b) const { return Laurent::q_power(b); }

  private:
    int r_;
    Kind kind_;
    std::vector<int> colors_;
    int color_sum_ = 0;
    mutable std::map<int, WeightSpace> spaces_;
};

/// Generator matrix on one weight space, mirroring the single-module
/// generator set. Diagonal generators stay within W(b); the ladder
/// generators land in the adjacent spaces of the same algebra.
SparseOpL tensor_generator(const TensorAlgebra& alg, int b, Gen g, int l = 1);

}  // namespace tqft
