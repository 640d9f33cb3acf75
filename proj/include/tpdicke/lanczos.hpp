#ifndef TPDICKE_LANCZOS_HPP
#define TPDICKE_LANCZOS_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace tpdicke {

struct LanczosOptions {
    double tol = 1e-10; // residual norm per Ritz pair
    int max_steps = 2000;
    unsigned seed = 20240901;
};

struct LanczosResult {
    Eigen::VectorXd eigenvalues; // ascending, k entries
    Eigen::MatrixXd eigenvectors;
    Eigen::VectorXd residuals;
    bool converged = false;
    int iterations = 0;
};

/// Lowest k eigenpairs of a symmetric sparse matrix, Lanczos with full
/// reorthogonalization and random restarts on subspace exhaustion.
LanczosResult lanczos_lowest(const Eigen::SparseMatrix<double>& mat, int k,
                             const LanczosOptions& opts = {});

} // namespace tpdicke

#endif
