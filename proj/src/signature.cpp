#include "tqft/signature.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace tqft {

Signature signature_at(const MatX<CycNum>& gram, int r, int k, double tol) {
    const int d = static_cast<int>(gram.rows());
    Eigen::MatrixXcd h(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) h(i, j) = gram(i, j).embed(k);
    // The exact matrix is hermitian; symmetrize away rounding noise but
    // reject anything that is structurally off.
    double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (d > 0 && asym > 1e-9 * scale) throw std::domain_error("signature: embedded Gram matrix is not hermitian");
    Eigen::MatrixXcd hs = (h + h.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hs);
    if (solver.info() != Eigen::Success) throw std::runtime_error("signature: eigensolver failed");

    Signature s;
    s.embedding = k;
    s.min_abs_eigenvalue = d == 0 ? 0.0 : std::abs(solver.eigenvalues()(0));
    for (int i = 0; i < d; ++i) {
        double lam = solver.eigenvalues()(i);
        s.min_abs_eigenvalue = std::min(s.min_abs_eigenvalue, std::abs(lam));
        if (std::abs(lam) <= tol * scale) throw std::domain_error("signature: eigenvalue too close to zero");
        if (lam > 0) ++s.positives;
        else ++s.negatives;
        double res = (hs * solver.eigenvectors().col(i) - lam * solver.eigenvectors().col(i)).norm();
        s.residual = std::max(s.residual, res);
    }
    return s;
}

std::vector<Signature> signatures(const MatX<CycNum>& gram, int r, double tol) {
    std::vector<Signature> out;
    for (int k = 1; 2 * k < r; ++k) {
        if (gcd_int(k, r) != 1) continue;
        out.push_back(signature_at(gram, r, k, tol));
    }
    return out;
}

}  // namespace tqft
