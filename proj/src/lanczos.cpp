#include "tpdicke/lanczos.hpp"

#include <cmath>
#include <random>

#include "tpdicke/errors.hpp"

namespace tpdicke {

namespace {

Eigen::VectorXd random_unit(Eigen::Index dim, std::mt19937& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v[i] = dist(rng);
    v.normalize();
    return v;
}

// Twice is enough.
void reorthogonalize(const Eigen::MatrixXd& basis, Eigen::Index cols,
                     Eigen::VectorXd& w) {
    if (cols == 0) return;
    const auto v = basis.leftCols(cols);
    w.noalias() -= v * (v.transpose() * w);
    w.noalias() -= v * (v.transpose() * w);
}

} // namespace

LanczosResult lanczos_lowest(const Eigen::SparseMatrix<double>& mat, int k,
                             const LanczosOptions& opts) {
    const Eigen::Index dim = mat.rows();
    if (k <= 0 || k > dim) throw DimensionError("lanczos: bad k");
    std::mt19937 rng(opts.seed);

    const int m_max = static_cast<int>(std::min<Eigen::Index>(dim, opts.max_steps));
    Eigen::MatrixXd basis(dim, m_max);
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m_max);
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(m_max); // beta[j] links j and j+1

    double norm_scale = 0.0;
    for (int i = 0; i < mat.nonZeros(); ++i)
        norm_scale = std::max(norm_scale, std::abs(mat.valuePtr()[i]));
    const double tol = opts.tol * std::max(1.0, norm_scale);
    const double breakdown = 1e-13 * std::max(1.0, norm_scale);

    basis.col(0) = random_unit(dim, rng);
    int m = 0;
    Eigen::VectorXd w(dim);

    LanczosResult out;
    auto extract = [&](int steps) {
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            tri(i, i) = alpha[i];
            if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        return es;
    };

    bool done = false;
    double edge_norm = 0.0;
    while (m < m_max && !done) {
        w.noalias() = mat * basis.col(m);
        alpha[m] = basis.col(m).dot(w);
        w -= alpha[m] * basis.col(m);
        if (m > 0) w -= beta[m - 1] * basis.col(m - 1);
        reorthogonalize(basis, m + 1, w);
        const double wnorm = w.norm();
        edge_norm = wnorm < breakdown ? 0.0 : wnorm;
        ++m;
        if (m < m_max) {
            if (wnorm < breakdown) {
                // Invariant subspace hit: restart with a fresh direction.
                beta[m - 1] = 0.0;
                Eigen::VectorXd fresh = random_unit(dim, rng);
                reorthogonalize(basis, m, fresh);
                const double fn = fresh.norm();
                if (fn < 1e-8) break; // space exhausted
                basis.col(m) = fresh / fn;
            } else {
                beta[m - 1] = wnorm;
                basis.col(m) = w / wnorm;
            }
        }
        if (m >= std::max(2 * k, 20) && (m % 10 == 0 || m == m_max)) {
            const auto es = extract(m);
            bool all_ok = true;
            const double edge = edge_norm;
            const int kk = std::min(k, m);
            for (int i = 0; i < kk; ++i) {
                const double res = std::abs(edge * es.eigenvectors()(m - 1, i));
                if (res > tol) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok && m >= k) done = true;
        }
    }

    const auto es = extract(m);
    const int kk = std::min(k, m);
    out.eigenvalues = es.eigenvalues().head(kk);
    out.eigenvectors.resize(dim, kk);
    out.eigenvectors.noalias() =
        basis.leftCols(m) * es.eigenvectors().leftCols(kk);
    out.residuals.resize(kk);
    for (int i = 0; i < kk; ++i) {
        // Ritz vectors can lose orthonormality slightly; renormalize.
        out.eigenvectors.col(i).normalize();
        out.residuals[i] =
            (mat * out.eigenvectors.col(i) - out.eigenvalues[i] * out.eigenvectors.col(i))
                .norm();
    }
    out.converged = done && kk == k;
    out.iterations = m;
    if (!out.converged) {
        // Accept anyway if the true residuals are fine (small spaces finish early).
        bool ok = kk == k;
        for (int i = 0; ok && i < kk; ++i) ok = out.residuals[i] <= 10.0 * tol;
        out.converged = ok;
    }
    return out;
}

} // namespace tpdicke
