#include "tpdicke/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpdicke {

namespace {

double hp_root(double n, double beta) {
    const double arg = n - beta * beta;
    return arg > 0.0 ? std::sqrt(arg) : 0.0;
}

// Eq.(7)-style energy with the coupling passed in, shared with the linear extension.
double squeezed_mode_energy(double omega, double gb) {
    const double t = 2.0 * gb / omega;
    if (std::abs(t) >= 1.0)
        throw DomainError("2|g_beta|/omega >= 1: squeezed mode unstable");
    const double r = 0.5 * std::atanh(t);
    return 0.5 * std::cosh(2.0 * r) / omega * (omega * omega - 4.0 * gb * gb) -
           0.5 * omega;
}

} // namespace

double effective_coupling(const ModelParams& params, double beta) {
    const double n = params.n();
    return params.g / n * (2.0 * beta) * hp_root(n, beta);
}

double energy_of_beta(const ModelParams& params, double beta) {
    const double n = params.n();
    if (std::abs(beta) > std::sqrt(n) * (1.0 + 1e-12))
        throw DomainError("|beta| > sqrt(N)");
    const double gb = effective_coupling(params, beta);
    return squeezed_mode_energy(params.omega, gb) + params.omega_q * beta * beta -
           0.5 * params.omega_q * n;
}

double golden_section_minimize(const std::function<double(double)>& f, double lo,
                               double hi, double abs_tol) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > abs_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double analytic_beta0(const ModelParams& params) {
    const DerivedParams d = derive(params);
    if (params.g <= d.g_t) return 0.0;
    const double num = 1.0 - d.mu;
    const double den = 4.0 * d.mu * d.mu * d.lambda * d.lambda - d.mu;
    const double ratio = num / den;
    const double inner = 1.0 - std::sqrt(ratio);
    return std::sqrt(0.5 * params.n() * inner);
}

MeanFieldSolution minimize(const ModelParams& params) {
    const DerivedParams d = derive(params);
    if (params.g >= d.g_collapse)
        throw CollapseError("g >= omega/2: ground state undefined");

    const double n = params.n();
    const double root_n = std::sqrt(n);
    double beta0 = analytic_beta0(params);

    const auto energy = [&](double b) { return energy_of_beta(params, b); };

    if (beta0 > 0.0) {
        // Polish in a bracket around the analytic value; fall back to a full
        // scan if the closed form landed outside the usable range.
        const double half_width = 0.05 * root_n;
        double lo = std::max(0.0, beta0 - half_width);
        double hi = std::min(root_n, beta0 + half_width);
        if (!(beta0 < root_n)) {
            lo = 0.0;
            hi = root_n;
        }
        beta0 = golden_section_minimize(energy, lo, hi, 1e-10);
        if (energy(beta0) >= energy(0.0)) beta0 = 0.0;
    }

    MeanFieldSolution sol;
    sol.beta = beta0;
    sol.beta_branches = beta0 > 0.0 ? std::vector<double>{beta0, -beta0}
                                    : std::vector<double>{0.0};
    sol.g_beta = effective_coupling(params, beta0);
    sol.r_a_mf = 0.5 * std::atanh(2.0 * sol.g_beta / params.omega);
    sol.e_ground = energy_of_beta(params, beta0);
    sol.jz_mean = beta0 * beta0 - 0.5 * n;
    sol.jx_mean = beta0 * hp_root(n, beta0);
    return sol;
}

LinearExtensionSolution solve_linear_extension(const ModelParams& params) {
    const DerivedParams d = derive(params);
    if (params.g >= d.g_collapse)
        throw CollapseError("g >= omega/2: ground state undefined");
    const double g1 = params.g1.value_or(0.0);
    const double n = params.n();
    const double root_n = std::sqrt(n);

    const auto couplings = [&](double beta) {
        const double shape = 2.0 * beta / n * hp_root(n, beta);
        return std::pair{g1 * shape, params.g * shape};
    };
    const auto energy = [&](double beta) {
        const auto [g1b, g2b] = couplings(beta);
        return energy_of_beta(params, beta) -
               g1b * g1b / (params.omega + 2.0 * g2b);
    };

    // No closed form with the linear term: scan then polish, both branches.
    const int n_grid = 2000;
    double best = 0.0, best_e = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_grid; ++i) {
        const double b = -root_n + 2.0 * root_n * i / n_grid;
        const double e = energy(b);
        if (e < best_e) {
            best_e = e;
            best = b;
        }
    }
    const double step = 2.0 * root_n / n_grid;
    const double lo = std::max(-root_n, best - step);
    const double hi = std::min(root_n, best + step);
    double beta_min = golden_section_minimize(energy, lo, hi, 1e-12);
    if (energy(0.0) <= energy(beta_min)) beta_min = 0.0;

    LinearExtensionSolution sol;
    sol.beta_selected = beta_min;
    const double e_plus = energy(std::abs(beta_min));
    const double e_minus = energy(-std::abs(beta_min));
    sol.degenerate = g1 == 0.0 || beta_min == 0.0;
    if (sol.degenerate && beta_min != 0.0) {
        sol.beta_branches = {std::abs(beta_min), -std::abs(beta_min)};
        sol.beta_selected = std::abs(beta_min);
    } else if (beta_min == 0.0) {
        sol.beta_branches = {0.0};
    } else {
        sol.beta_branches = {e_plus <= e_minus ? std::abs(beta_min)
                                               : -std::abs(beta_min)};
        sol.beta_selected = sol.beta_branches.front();
    }
    const auto [g1b, g2b] = couplings(sol.beta_selected);
    sol.g1_beta = g1b;
    sol.g2_beta = g2b;
    sol.alpha_disp = g1b / (params.omega + 2.0 * g2b);
    sol.a_mean = -sol.alpha_disp;
    sol.r_c = 0.5 * std::atanh(2.0 * g2b / params.omega);
    sol.e_ground_ext = energy(sol.beta_selected);
    return sol;
}

} // namespace tpdicke
