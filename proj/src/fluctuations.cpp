#include "tpdicke/fluctuations.hpp"

#include <cmath>
#include <utility>

namespace tpdicke {

namespace {

void check_guard(const ModelParams& params, const FluctuationOptions& opts) {
    const DerivedParams d = derive(params);
    const double rel = std::abs(params.g - d.g_t) / d.g_t;
    if (rel < opts.guard_scale / params.n())
        throw PhaseError("inside near-critical guard band: expansion invalid");
}

} // namespace

BogoliubovResult bogoliubov_diagonalize(const QuadraticBosonForm& form) {
    const double a = form.coeff_n;
    const double stiff = form.coeff_n + 4.0 * form.coeff_sq;
    if (!(a > 0.0) || !(stiff > 0.0))
        throw InstabilityError("quadratic form not diagonalizable as harmonic");
    BogoliubovResult res;
    res.e_exc = std::sqrt(a * stiff);
    res.r = 0.25 * std::log(stiff / a);
    res.displacement = -form.coeff_lin / stiff;
    res.e_ground_shift = form.c_number + 0.5 * (res.e_exc - a) -
                         form.coeff_lin * form.coeff_lin / stiff;
    return res;
}

QuadraticBosonForm phase1_effective(const ModelParams& params,
                                    const FluctuationOptions& opts) {
    const DerivedParams d = derive(params);
    if (params.g >= d.g_t) throw PhaseError("phase1_effective requires g < g_t");
    check_guard(params, opts);
    QuadraticBosonForm form;
    form.c_number = -0.5 * params.omega_q * params.n();
    form.coeff_n = params.omega_q;
    form.coeff_sq = -params.g * params.g / (params.n() * params.omega);
    form.coeff_lin = 0.0;
    return form;
}

Lambda2Coefficients phase2_coefficients(const ModelParams& params,
                                        const MeanFieldSolution& solution) {
    const double n = params.n();
    const double omega = params.omega;
    const double g = params.g;
    const double alpha = solution.beta / std::sqrt(n);
    const double a2 = alpha * alpha;
    const double chi = std::sqrt(1.0 - a2);

    Lambda2Coefficients c;
    c.alpha_hp = alpha;
    c.chi = chi;
    c.delta = (1.0 - 2.0 * a2) / (1.0 - a2);

    const double t_inf = 4.0 * g * alpha * chi / omega;
    if (std::abs(t_inf) >= 1.0)
        throw DomainError("arctanh argument >= 1 in r_a2");
    // 1/N correction linearized in 1/N; the bare sum can leave the arctanh
    // domain close to the collapse point
    c.r_a2 = 0.5 * std::atanh(t_inf) +
             0.5 * g * alpha / (omega * chi * n) / (1.0 - t_inf * t_inf);

    const double ch = 1.0 / std::sqrt(1.0 - t_inf * t_inf);
    const double sh = t_inf * ch;

    c.lambda0 = ch - t_inf * sh;
    c.lambda1 = params.omega_q * n * alpha / (2.0 * omega);
    c.lambda2 = g * chi * c.delta / omega * ch;
    c.lambda3 = -2.0 * sh * g * chi * c.delta / omega;
    c.lambda4 = params.omega_q * n / (2.0 * omega);

    const double vn = -g * alpha / (chi * omega);
    const double vsq = -g / omega * (alpha / (2.0 * chi) +
                                     a2 * alpha / (4.0 * chi * chi * chi));
    c.v1_n = sh * vn;
    c.v1_sq = sh * vsq;
    c.v2_n = ch * vn;
    c.v2_sq = ch * vsq;
    return c;
}

Phase2Form phase2_effective(const ModelParams& params,
                            const Lambda2Coefficients& c) {
    const double n = params.n();
    const double root_n = std::sqrt(n);
    const double two_omega = 2.0 * params.omega;

    // Dimensionless (units of 2 omega), K0' projected onto its ground value 1/4.
    const double a2 = c.lambda4 / n - 0.5 * c.v1_n / n;
    const double b2 = -c.lambda2 * c.lambda2 / (2.0 * n * c.lambda0) -
                      0.5 * c.v1_sq / n;
    const double l2 = c.lambda1 / root_n + 0.25 * c.lambda3 / root_n;

    Phase2Form out;
    out.form.coeff_n = two_omega * a2;
    out.form.coeff_sq = two_omega * b2;
    out.form.coeff_lin = two_omega * l2;
    out.form.c_number = two_omega * 0.25 * c.lambda0 - 0.5 * params.omega -
                        0.5 * params.omega_q * n +
                        params.omega_q * n * c.alpha_hp * c.alpha_hp;
    out.beta_correction = -l2 / (a2 + 4.0 * b2);
    return out;
}

double phase1_excitation_energy(const ModelParams& params) {
    const double arg =
        1.0 - 4.0 * params.g * params.g /
                  (params.n() * params.omega * params.omega_q);
    if (arg <= 0.0) throw PhaseError("phase-1 excitation energy requires g < g_t");
    return params.omega_q * std::sqrt(arg);
}

namespace {

// The two factors under the square root of the closed-form E_exc^(2).
std::pair<double, double> phase2_terms(const ModelParams& params, double alpha) {
    const double a2 = alpha * alpha;
    const double w = params.omega;
    const double term1 = 1.0 + a2 / (1.0 - 2.0 * a2);
    const double term2 =
        1.0 + a2 / (1.0 - 2.0 * a2) * (3.0 + a2 / (1.0 - a2)) -
        (1.0 - 2.0 * a2) /
            (1.0 - a2 -
             16.0 * params.g * params.g / (w * w) * a2 * (1.0 - a2) * (1.0 - a2));
    return {term1, term2};
}

} // namespace

double phase2_excitation_energy(const ModelParams& params, double alpha_hp) {
    const auto [t1, t2] = phase2_terms(params, alpha_hp);
    const double prod = t1 * t2;
    if (prod < 0.0) throw InstabilityError("closed-form E_exc^(2) imaginary");
    return params.omega_q * std::sqrt(prod);
}

double phase2_rs_closed_form(const ModelParams& params, double alpha_hp) {
    const auto [t1, t2] = phase2_terms(params, alpha_hp);
    return 0.25 * std::log(t2 / t1);
}

FluctuationSolution solve_fluctuations(const ModelParams& params,
                                       const FluctuationOptions& opts) {
    const RegimeLabel regime = regime_classify(params);
    if (regime == RegimeLabel::Collapsed)
        throw CollapseError("g >= omega/2: ground state undefined");
    if (regime == RegimeLabel::NoSPTWindow)
        throw PhaseError("omega_q N >= omega: no transition inside the model window");

    FluctuationSolution sol;
    sol.phase = regime;
    if (regime == RegimeLabel::Normal) {
        const QuadraticBosonForm form = phase1_effective(params, opts);
        const BogoliubovResult bog = bogoliubov_diagonalize(form);
        sol.r_s = bog.r;
        sol.r_a = 0.0;
        sol.e_exc = bog.e_exc;
        sol.e_ground = bog.e_ground_shift;
    } else {
        check_guard(params, opts);
        const MeanFieldSolution mf = minimize(params);
        const Lambda2Coefficients coeffs = phase2_coefficients(params, mf);
        const Phase2Form ph2 = phase2_effective(params, coeffs);
        const BogoliubovResult bog = bogoliubov_diagonalize(ph2.form);
        sol.r_s = bog.r;
        sol.r_a = coeffs.r_a2;
        sol.e_exc = bog.e_exc;
        sol.e_ground = bog.e_ground_shift;
        sol.beta_correction = ph2.beta_correction;
    }
    sol.var_xd = std::exp(-2.0 * sol.r_s);
    sol.var_pd = std::exp(2.0 * sol.r_s);
    sol.var_xa = std::exp(-2.0 * sol.r_a);
    sol.var_pa = std::exp(2.0 * sol.r_a);
    return sol;
}

SpinFluctuations spin_fluctuations(const ModelParams& params,
                                   const FluctuationSolution& fl,
                                   const MeanFieldSolution& mf) {
    const double n = params.n();
    const double beta = mf.beta;
    const double rem = n - beta * beta;
    SpinFluctuations s;
    s.jx_mean = mf.jx_mean;
    s.jy_mean = 0.0;
    s.jz_mean = mf.jz_mean;
    const double cx = (n - 2.0 * beta * beta) / (2.0 * std::sqrt(rem));
    s.var_jx = cx * cx * fl.var_xd;
    s.var_jy = 0.25 * rem * fl.var_pd;
    s.var_jz = beta * beta * fl.var_xd;
    return s;
}

} // namespace tpdicke
