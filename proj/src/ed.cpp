#include "tpdicke/ed.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <ostream>

namespace tpdicke {

std::vector<int> BasisSpec::fock_values() const {
    std::vector<int> out;
    const int start = parity == ParitySector::Odd ? 1 : 0;
    const int step = parity == ParitySector::Both ? 1 : 2;
    for (int n = start; n <= fock_cutoff; n += step) out.push_back(n);
    return out;
}

Eigen::Index BasisSpec::dimension() const {
    return static_cast<Eigen::Index>(n_qubits + 1) *
           static_cast<Eigen::Index>(fock_values().size());
}

namespace {

double jp_coef(double j, double m) { // <m+1| J_+ |m>
    return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

struct BasisIndex {
    std::vector<int> fock;     // local -> n
    std::vector<int> local_of; // n -> local (-1 if absent)
    Eigen::Index n_count = 0;

    explicit BasisIndex(const BasisSpec& spec)
        : fock(spec.fock_values()), local_of(spec.fock_cutoff + 1, -1) {
        n_count = static_cast<Eigen::Index>(fock.size());
        for (Eigen::Index i = 0; i < n_count; ++i) local_of[fock[i]] = static_cast<int>(i);
    }
    Eigen::Index idx(Eigen::Index m_idx, Eigen::Index local_n) const {
        return m_idx * n_count + local_n;
    }
};

} // namespace

Eigen::SparseMatrix<double> build_hamiltonian(const ModelParams& params,
                                              const BasisSpec& basis,
                                              const SolveOptions& opts) {
    if (basis.n_qubits < 1 || basis.fock_cutoff < 0)
        throw DimensionError("bad basis spec");
    if (basis.dimension() > opts.dimension_cap)
        throw DimensionError("basis dimension exceeds configured cap");
    if (params.coupling == CouplingOrder::OnePhoton &&
        basis.parity != ParitySector::Both)
        throw DomainError("one-photon coupling does not conserve photon parity");

    const BasisIndex bi(basis);
    const long long nq = basis.n_qubits;
    const double j = 0.5 * static_cast<double>(nq);
    const double gn = params.g / static_cast<double>(nq);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(basis.dimension()) * 4);

    for (Eigen::Index mi = 0; mi <= nq; ++mi) {
        const double m = -j + static_cast<double>(mi);
        for (Eigen::Index ln = 0; ln < bi.n_count; ++ln) {
            const int n = bi.fock[ln];
            const Eigen::Index row = bi.idx(mi, ln);
            trip.emplace_back(row, row, params.omega * n + params.omega_q * m);
            if (mi + 1 > nq) continue;
            const double spin = jp_coef(j, m); // couples m <-> m+1
            if (params.coupling == CouplingOrder::TwoPhoton) {
                if (n + 2 <= basis.fock_cutoff && bi.local_of[n + 2] >= 0) {
                    const double val =
                        gn * spin * std::sqrt((n + 1.0) * (n + 2.0));
                    const Eigen::Index col = bi.idx(mi + 1, bi.local_of[n + 2]);
                    trip.emplace_back(row, col, val);
                    trip.emplace_back(col, row, val);
                }
                // same-m-step, photon-lowering partner
                if (n - 2 >= 0 && bi.local_of[n - 2] >= 0) {
                    const double val = gn * spin * std::sqrt(n * (n - 1.0));
                    const Eigen::Index col = bi.idx(mi + 1, bi.local_of[n - 2]);
                    trip.emplace_back(row, col, val);
                    trip.emplace_back(col, row, val);
                }
            } else {
                if (n + 1 <= basis.fock_cutoff) {
                    const double val = gn * spin * std::sqrt(n + 1.0);
                    const Eigen::Index col = bi.idx(mi + 1, bi.local_of[n + 1]);
                    trip.emplace_back(row, col, val);
                    trip.emplace_back(col, row, val);
                }
                if (n - 1 >= 0) {
                    const double val = gn * spin * std::sqrt(static_cast<double>(n));
                    const Eigen::Index col = bi.idx(mi + 1, bi.local_of[n - 1]);
                    trip.emplace_back(row, col, val);
                    trip.emplace_back(col, row, val);
                }
            }
        }
    }

    Eigen::SparseMatrix<double> mat(basis.dimension(), basis.dimension());
    mat.setFromTriplets(trip.begin(), trip.end());
    mat.makeCompressed();
    return mat;
}

namespace {

struct Expectations {
    double n_photon = 0, jz = 0, jx = 0, x = 0, a2pa2 = 0;
};

Expectations expectations(const BasisSpec& basis, const Eigen::VectorXd& v) {
    const BasisIndex bi(basis);
    const long long nq = basis.n_qubits;
    const double j = 0.5 * static_cast<double>(nq);
    Expectations e;
    for (Eigen::Index mi = 0; mi <= nq; ++mi) {
        const double m = -j + static_cast<double>(mi);
        for (Eigen::Index ln = 0; ln < bi.n_count; ++ln) {
            const int n = bi.fock[ln];
            const double vi = v[bi.idx(mi, ln)];
            e.n_photon += vi * vi * n;
            e.jz += vi * vi * m;
            if (mi + 1 <= nq)
                e.jx += jp_coef(j, m) * vi * v[bi.idx(mi + 1, ln)];
            if (n + 1 <= basis.fock_cutoff && bi.local_of[n + 1] >= 0)
                e.x += 2.0 * std::sqrt(n + 1.0) * vi *
                       v[bi.idx(mi, bi.local_of[n + 1])];
            if (n + 2 <= basis.fock_cutoff && bi.local_of[n + 2] >= 0)
                e.a2pa2 += 2.0 * std::sqrt((n + 1.0) * (n + 2.0)) * vi *
                           v[bi.idx(mi, bi.local_of[n + 2])];
        }
    }
    return e;
}

StateObservables make_observables(const BasisSpec& basis,
                                  const Eigen::VectorXd& v) {
    const Expectations e = expectations(basis, v);
    StateObservables obs;
    obs.n_photon = e.n_photon;
    obs.jz = e.jz;
    obs.jx = e.jx;
    const double xx = e.a2pa2 + 2.0 * e.n_photon + 1.0;
    const double pp = 2.0 * e.n_photon + 1.0 - e.a2pa2;
    obs.var_xa = xx - e.x * e.x;
    obs.var_pa = pp; // <P> = 0 for real eigenvectors
    return obs;
}

// <u| J_x |v>, for symmetry-broken recombination.
double jx_bilinear(const BasisSpec& basis, const Eigen::VectorXd& u,
                   const Eigen::VectorXd& v) {
    const BasisIndex bi(basis);
    const long long nq = basis.n_qubits;
    const double j = 0.5 * static_cast<double>(nq);
    double acc = 0.0;
    for (Eigen::Index mi = 0; mi < nq; ++mi) {
        const double c = jp_coef(j, -j + static_cast<double>(mi));
        for (Eigen::Index ln = 0; ln < bi.n_count; ++ln) {
            acc += 0.5 * c *
                   (u[bi.idx(mi, ln)] * v[bi.idx(mi + 1, ln)] +
                    u[bi.idx(mi + 1, ln)] * v[bi.idx(mi, ln)]);
        }
    }
    return acc;
}

} // namespace

EDResult solve_lowest(const ModelParams& params, const BasisSpec& basis, int k,
                      const SolveOptions& opts) {
    const auto mat = build_hamiltonian(params, basis, opts);
    const Eigen::Index dim = mat.rows();
    if (k > dim) throw DimensionError("k exceeds basis dimension");

    EDResult result;
    result.cutoff_used = basis.fock_cutoff;
    Eigen::VectorXd vals;
    Eigen::MatrixXd vecs;
    if (dim < opts.dense_threshold) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(mat)};
        if (es.info() != Eigen::Success)
            throw ConvergenceError("dense eigensolver failed");
        vals = es.eigenvalues().head(k);
        vecs = es.eigenvectors().leftCols(k);
    } else {
        LanczosOptions lopts;
        lopts.tol = opts.tol;
        lopts.seed = opts.seed;
        const auto lr = lanczos_lowest(mat, k, lopts);
        if (!lr.converged) {
            double worst = 0.0;
            for (int i = 0; i < lr.residuals.size(); ++i)
                worst = std::max(worst, lr.residuals[i]);
            throw ConvergenceError("lanczos did not converge, max residual " +
                                   std::to_string(worst));
        }
        vals = lr.eigenvalues;
        vecs = lr.eigenvectors;
    }
    for (int i = 0; i < k; ++i) {
        result.eigenvalues.push_back(vals[i]);
        result.observables.push_back(make_observables(basis, vecs.col(i)));
    }
    result.convergence_history.emplace_back(basis.fock_cutoff,
                                            result.eigenvalues.front());
    return result;
}

EDResult convergence_scan(const ModelParams& params, const BasisSpec& basis,
                          int k, const std::vector<int>& cutoffs,
                          double rel_tol, const SolveOptions& opts) {
    if (cutoffs.size() < 3)
        throw DimensionError("convergence_scan needs at least 3 cutoffs");
    std::vector<std::pair<int, double>> history;
    EDResult last;
    for (int cutoff : cutoffs) {
        BasisSpec spec = basis;
        spec.fock_cutoff = cutoff;
        last = solve_lowest(params, spec, k, opts);
        history.emplace_back(cutoff, last.eigenvalues.front());
    }
    last.convergence_history = history;
    const double e_prev = history[history.size() - 2].second;
    const double e_last = history.back().second;
    last.converged =
        std::abs(e_last - e_prev) < rel_tol * std::max(1e-300, std::abs(e_last));
    return last;
}

CollapseProbe collapse_probe(const ModelParams& params, const BasisSpec& basis,
                             int k, const std::vector<double>& g_grid,
                             const SolveOptions& opts) {
    if (k < 2) throw DimensionError("collapse_probe needs k >= 2");
    CollapseProbe probe;
    probe.cutoff = basis.fock_cutoff;
    probe.cutoff_check = basis.fock_cutoff / 2;
    for (double g : g_grid) {
        ModelParams p = params;
        p.g = g;
        probe.g_values.push_back(g);
        const auto res = solve_lowest(p, basis, k, opts);
        probe.mean_spacing.push_back(
            (res.eigenvalues.back() - res.eigenvalues.front()) / (k - 1));
        BasisSpec half = basis;
        half.fock_cutoff = probe.cutoff_check;
        const auto res2 = solve_lowest(p, half, k, opts);
        probe.mean_spacing_check.push_back(
            (res2.eigenvalues.back() - res2.eigenvalues.front()) / (k - 1));
    }
    return probe;
}

void dump_coo(const Eigen::SparseMatrix<double>& mat, std::ostream& os) {
    for (int outer = 0; outer < mat.outerSize(); ++outer)
        for (Eigen::SparseMatrix<double>::InnerIterator it(mat, outer); it; ++it)
            os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

std::pair<double, double> symmetry_broken_jx(const ModelParams& params,
                                             const BasisSpec& basis,
                                             const Eigen::VectorXd& state_a,
                                             const Eigen::VectorXd& state_b) {
    (void)params;
    Eigen::Matrix2d q;
    q(0, 0) = jx_bilinear(basis, state_a, state_a);
    q(1, 1) = jx_bilinear(basis, state_b, state_b);
    q(0, 1) = q(1, 0) = jx_bilinear(basis, state_a, state_b);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q);
    return {es.eigenvalues()[0], es.eigenvalues()[1]};
}

} // namespace tpdicke
