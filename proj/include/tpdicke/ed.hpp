#ifndef TPDICKE_ED_HPP
#define TPDICKE_ED_HPP

#include <Eigen/Sparse>
#include <iosfwd>
#include <utility>
#include <vector>

#include "tpdicke/lanczos.hpp"
#include "tpdicke/model.hpp"

namespace tpdicke {

enum class ParitySector { Even, Odd, Both };

/// Product basis |j=N/2, m> x |n>, index = m_index * n_count + local_n.
/// Parity sectors keep only Fock states with the matching n mod 2.
struct BasisSpec {
    long long n_qubits = 1;
    int fock_cutoff = 0; // max photon number n_max
    ParitySector parity = ParitySector::Both;

    std::vector<int> fock_values() const;
    Eigen::Index dimension() const;
};

struct SolveOptions {
    int k = 6;
    double tol = 1e-10;
    Eigen::Index dense_threshold = 2000; // dense solver below, Lanczos above
    Eigen::Index dimension_cap = 2'000'000;
    unsigned seed = 20240901;
};

struct StateObservables {
    double n_photon = 0.0;
    double jz = 0.0;
    double jx = 0.0;
    double var_xa = 0.0;
    double var_pa = 0.0;
};

struct EDResult {
    std::vector<double> eigenvalues; // ascending
    std::vector<StateObservables> observables;
    int cutoff_used = 0;
    bool converged = true;
    std::vector<std::pair<int, double>> convergence_history; // (cutoff, E0)
};

Eigen::SparseMatrix<double> build_hamiltonian(const ModelParams& params,
                                              const BasisSpec& basis,
                                              const SolveOptions& opts = {});

EDResult solve_lowest(const ModelParams& params, const BasisSpec& basis, int k,
                      const SolveOptions& opts = {});

/// Ground-energy convergence over ascending Fock cutoffs. Non-convergence is
/// reported through the flag, never thrown.
EDResult convergence_scan(const ModelParams& params, const BasisSpec& basis,
                          int k, const std::vector<int>& cutoffs,
                          double rel_tol = 1e-9, const SolveOptions& opts = {});

struct CollapseProbe {
    std::vector<double> g_values;
    std::vector<double> mean_spacing; // of the k lowest levels
    int cutoff = 0;
    int cutoff_check = 0; // second cutoff used to gauge truncation sensitivity
    std::vector<double> mean_spacing_check;
};

CollapseProbe collapse_probe(const ModelParams& params, const BasisSpec& basis,
                             int k, const std::vector<double>& g_grid,
                             const SolveOptions& opts = {});

/// Coordinate-list dump: "row col value" per line, for external verification.
void dump_coo(const Eigen::SparseMatrix<double>& mat, std::ostream& os);

/// Symmetric/antisymmetric recombination of two quasi-degenerate states into
/// maximal-|<J_x>| symmetry-broken combinations. Returns the two |<J_x>| values.
std::pair<double, double> symmetry_broken_jx(const ModelParams& params,
                                             const BasisSpec& basis,
                                             const Eigen::VectorXd& state_a,
                                             const Eigen::VectorXd& state_b);

} // namespace tpdicke

#endif
