#ifndef TPDICKE_FLUCTUATIONS_HPP
#define TPDICKE_FLUCTUATIONS_HPP

#include "tpdicke/meanfield.hpp"
#include "tpdicke/model.hpp"

namespace tpdicke {

/// Canonical single-mode quadratic form
///   c + A d'd + B (d+d')^2 + L (d+d'),
/// with A = coeff_n, B = coeff_sq, L = coeff_lin. (d'^2 + d^2) terms are
/// folded in via (d^2+d'^2) = (d+d')^2 - 2 d'd - 1.
struct QuadraticBosonForm {
    double c_number = 0.0;
    double coeff_n = 0.0;
    double coeff_sq = 0.0;
    double coeff_lin = 0.0;
};

struct BogoliubovResult {
    double e_exc = 0.0;          // sqrt(A (A + 4B))
    double r = 0.0;              // var(X) = exp(-2r) in the transformed vacuum
    double e_ground_shift = 0.0; // ground energy incl. c_number and displacement
    double displacement = 0.0;   // shift of <d> absorbing the linear term
};

BogoliubovResult bogoliubov_diagonalize(const QuadraticBosonForm& form);

struct FluctuationOptions {
    // Refuse analytic results when |g - g_t|/g_t < guard_scale / N.
    double guard_scale = 0.1;
};

/// Normal-phase effective Hamiltonian for the d mode.
QuadraticBosonForm phase1_effective(const ModelParams& params,
                                    const FluctuationOptions& opts = {});

/// Coefficients of the superradiant-phase effective Hamiltonian.
/// The lambda/V entries are evaluated in the thermodynamic-limit convention
/// (the Bogoliubov angle without its 1/N correction) so that the assembled
/// form reproduces the closed-form excitation energy; r_a2 keeps the full
/// 1/N correction and describes the photon field state.
struct Lambda2Coefficients {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double v1_n = 0.0;  // d'd coefficient inside V1
    double v1_sq = 0.0; // (d+d')^2 coefficient inside V1
    double v2_n = 0.0;
    double v2_sq = 0.0;
    double r_a2 = 0.0;      // field squeezing, incl. the 1/N term
    double alpha_hp = 0.0;  // beta / sqrt(N)
    double chi = 0.0;       // sqrt(1 - alpha^2)
    double delta = 0.0;     // 1 - beta^2/(N - beta^2)
};

Lambda2Coefficients phase2_coefficients(const ModelParams& params,
                                        const MeanFieldSolution& solution);

struct Phase2Form {
    QuadraticBosonForm form;   // physical units, K0' projected to 1/4
    double beta_correction = 0.0; // O(1/sqrt(N)) shift absorbing the linear term
};

Phase2Form phase2_effective(const ModelParams& params,
                            const Lambda2Coefficients& coeffs);

struct FluctuationSolution {
    RegimeLabel phase = RegimeLabel::Normal;
    double r_s = 0.0;
    double r_a = 0.0;
    double e_exc = 0.0;
    double e_ground = 0.0;
    double var_xd = 1.0;
    double var_pd = 1.0;
    double var_xa = 1.0;
    double var_pa = 1.0;
    double beta_correction = 0.0;
};

FluctuationSolution solve_fluctuations(const ModelParams& params,
                                       const FluctuationOptions& opts = {});

struct SpinFluctuations {
    double jx_mean = 0.0;
    double jy_mean = 0.0;
    double jz_mean = 0.0;
    double var_jx = 0.0;
    double var_jy = 0.0;
    double var_jz = 0.0;
};

/// Leading-order quadrature map; quadratic-in-d contributions are dropped.
SpinFluctuations spin_fluctuations(const ModelParams& params,
                                   const FluctuationSolution& fl,
                                   const MeanFieldSolution& mf);

/// Closed-form excitation energies, used as the analytic cross-checks.
double phase1_excitation_energy(const ModelParams& params);
double phase2_excitation_energy(const ModelParams& params, double alpha_hp);
double phase2_rs_closed_form(const ModelParams& params, double alpha_hp);

} // namespace tpdicke

#endif
