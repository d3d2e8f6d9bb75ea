#pragma once

#include "tqft/matrix.hpp"

#include <vector>

namespace tqft {

struct Signature {
    int embedding = 1;  // k with zeta -> exp(2 pi i k / r)
    int positives = 0;
    int negatives = 0;
    double min_abs_eigenvalue = 0.0;
    double residual = 0.0;  // max |H v - lambda v| over the eigenpairs
};

/// Per-embedding signatures of an exact hermitian Gram matrix, one entry per
/// k coprime to r with k < r - k (conjugate embeddings give equal data and
/// are checked by the caller when wanted). Eigenvalues within `tol` of zero
/// are a hard error: the form must be nondegenerate.
std::vector<Signature> signatures(const MatX<CycNum>& gram, int r, double tol);

/// One embedding.
Signature signature_at(const MatX<CycNum>& gram, int r, int k, double tol);

}  // namespace tqft
