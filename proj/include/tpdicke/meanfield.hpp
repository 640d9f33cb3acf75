#ifndef TPDICKE_MEANFIELD_HPP
#define TPDICKE_MEANFIELD_HPP

#include <functional>
#include <vector>

#include "tpdicke/model.hpp"

namespace tpdicke {

/// Variational ground state over the displaced Holstein-Primakoff mode.
struct MeanFieldSolution {
    double beta = 0.0;                 // selected branch (+beta0 first by convention)
    std::vector<double> beta_branches; // {0} or {+beta0, -beta0}
    double g_beta = 0.0;               // effective photon coupling at beta
    double r_a_mf = 0.0;               // field squeezing parameter
    double e_ground = 0.0;
    double jz_mean = 0.0; // |beta|^2 - N/2
    double jx_mean = 0.0; // beta sqrt(N - beta^2), sign follows branch
};

/// Displaced-squeezed solution of the linear-term extension.
struct LinearExtensionSolution {
    double beta_selected = 0.0;
    std::vector<double> beta_branches;
    double g1_beta = 0.0;
    double g2_beta = 0.0;
    double alpha_disp = 0.0; // g1_beta / (omega + 2 g2_beta)
    double a_mean = 0.0;     // -alpha_disp
    double r_c = 0.0;
    double e_ground_ext = 0.0;
    bool degenerate = false; // true only when g1 = 0 restores the +-beta symmetry
};

/// Effective photon coupling g_beta = (2 g beta / N) sqrt(N - beta^2).
double effective_coupling(const ModelParams& params, double beta);

/// Mean-field energy at given order-parameter value.
double energy_of_beta(const ModelParams& params, double beta);

/// Minimizes energy_of_beta; analytic beta0 polished by golden-section search.
MeanFieldSolution minimize(const ModelParams& params);

/// Closed-form beta0 for g > g_t (0 otherwise).
double analytic_beta0(const ModelParams& params);

LinearExtensionSolution solve_linear_extension(const ModelParams& params);

/// Golden-section minimizer on [lo, hi]; used as the polish step and by oracles.
double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double abs_tol = 1e-10);

} // namespace tpdicke

#endif
