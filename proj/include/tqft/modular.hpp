#pragma once

#include "tqft/cyclotomic.hpp"
#include "tqft/matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tqft {

/// Column-sparse matrix over Q(ζ_r). The operator matrices produced by the
/// module layer are very sparse and huge; elimination results are dense.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    const CycField* field = nullptr;
    std::vector<std::vector<std::pair<int, CycNum>>> col;  // (row, value), rows increasing

    SparseMat() = default;
    SparseMat(int r, int c, const CycField& f) : rows(r), cols(c), field(&f), col(static_cast<size_t>(c)) {}

    void add(int r, int c, CycNum v) {
        if (!v.is_zero()) col[static_cast<size_t>(c)].emplace_back(r, std::move(v));
    }

    static SparseMat from_dense(const MatX<CycNum>& a, const CycField& f);
    MatX<CycNum> to_dense() const;

    /// Exact product with a dense matrix.
    MatX<CycNum> apply(const MatX<CycNum>& x) const;

    /// Stack vertically: [this; other].
    static SparseMat vstack(const SparseMat& a, const SparseMat& b);

    size_t nonzeros() const {
        size_t n = 0;
        for (const auto& c : col) n += c.size();
        return n;
    }
};

/// Exact kernel with canonical (unit-pattern) basis, computed by modular
/// elimination with CRT reconstruction, then certified:
///   - A * K = 0 is checked exactly;
///   - the mod-p pivot minor shows rank(A) >= cols - k, so K spans.
/// Falls back to dense exact elimination if reconstruction keeps failing.
MatX<CycNum> certified_kernel(const SparseMat& a, int* rank_out = nullptr);

struct CertifiedColumnSpace {
    MatX<CycNum> basis;           // reduced column echelon form of the column space
    std::vector<int> pivot_rows;  // increasing unit rows of basis
};

/// Exact canonical column-space basis, certified by an exact A * U = basis
/// check plus a kernel certificate for the rank upper bound.
CertifiedColumnSpace certified_column_space(const SparseMat& a);

/// Exact particular solution of A x = b (free coordinates zero), certified
/// by an exact A * x = b check. Throws std::domain_error when inconsistent.
MatX<CycNum> certified_solve(const SparseMat& a, const MatX<CycNum>& b);

}  // namespace tqft
