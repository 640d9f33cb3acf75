#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tpdicke/meanfield.hpp"

using namespace tpdicke;

namespace {

ModelParams reference_params() {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.005;
    p.n_qubits = 100;
    p.g = 0.45;
    return p;
}

// Independent minimizer: exhaustive grid scan plus golden polish.
double oracle_beta(const ModelParams& p) {
    const double root_n = std::sqrt(p.n());
    const int n_grid = 4000;
    double best = 0.0, best_e = energy_of_beta(p, 0.0);
    for (int i = 0; i <= n_grid; ++i) {
        const double b = root_n * i / n_grid;
        const double e = energy_of_beta(p, b);
        if (e < best_e) {
            best_e = e;
            best = b;
        }
    }
    if (best == 0.0) return 0.0;
    const double step = root_n / n_grid;
    return golden_section_minimize(
        [&](double b) { return energy_of_beta(p, b); },
        std::max(0.0, best - step), std::min(root_n, best + step), 1e-12);
}

ModelParams random_superradiant(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ModelParams p;
    p.omega = 0.5 + 1.5 * u(rng);
    p.n_qubits = 20 + static_cast<long long>(380 * u(rng));
    const double lambda = 1.2 + 48.8 * u(rng);
    p.omega_q = p.omega / (2.0 * lambda * p.n());
    const double g_t = derive(p).g_t;
    p.g = g_t * 1.05 + (0.49 * p.omega - g_t * 1.05) * u(rng);
    return p;
}

} // namespace

TEST_CASE("reference order parameter") {
    const MeanFieldSolution sol = minimize(reference_params());
    CHECK(sol.beta == doctest::Approx(5.8156).epsilon(1e-4));
    CHECK(sol.beta == doctest::Approx(analytic_beta0(reference_params())).epsilon(1e-8));
    CHECK(sol.beta_branches.size() == 2);
    CHECK(sol.beta_branches[1] == -sol.beta_branches[0]);
}

TEST_CASE("minimize matches the grid oracle on random superradiant points") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = random_superradiant(rng);
        const MeanFieldSolution sol = minimize(p);
        const double beta_ref = oracle_beta(p);
        CAPTURE(p.omega);
        CAPTURE(p.omega_q);
        CAPTURE(p.g);
        CAPTURE(p.n_qubits);
        CHECK(std::abs(sol.beta - beta_ref) <= 1e-4 * std::sqrt(p.n()));
    }
}

TEST_CASE("normal phase sits at beta = 0") {
    ModelParams p = reference_params();
    p.g = 0.2; // below g_t
    const MeanFieldSolution sol = minimize(p);
    CHECK(sol.beta == 0.0);
    CHECK(sol.beta_branches == std::vector<double>{0.0});
    CHECK(sol.e_ground ==
          doctest::Approx(-0.5 * p.omega_q * p.n()).epsilon(1e-14));
    CHECK(sol.jz_mean == doctest::Approx(-0.5 * p.n()).epsilon(1e-14));
    CHECK(sol.jx_mean == 0.0);
}

TEST_CASE("branch symmetry of the energy landscape") {
    const ModelParams p = reference_params();
    for (double b : {1.0, 3.3, 5.5, 9.0})
        CHECK(energy_of_beta(p, b) ==
              doctest::Approx(energy_of_beta(p, -b)).epsilon(1e-14));
}

TEST_CASE("order parameter is continuous at the transition") {
    ModelParams p = reference_params();
    const double g_t = derive(p).g_t;
    p.g = g_t * (1.0 - 1e-6);
    CHECK(minimize(p).beta == 0.0);
    p.g = g_t * (1.0 + 1e-6);
    const double beta_above = minimize(p).beta;
    CHECK(beta_above > 0.0);
    CHECK(beta_above < 0.05 * std::sqrt(p.n()));
}

TEST_CASE("beta0 approaches sqrt(N/2) toward the collapse point") {
    ModelParams p = reference_params();
    p.omega_q = 5e-7; // lambda = 1e4: deep superradiant limit
    p.g = 0.499999;
    const double beta = analytic_beta0(p);
    CHECK(beta * beta == doctest::Approx(0.5 * p.n()).epsilon(1e-5));
}

TEST_CASE("domain guards") {
    ModelParams p = reference_params();
    CHECK_THROWS_AS(energy_of_beta(p, 1.01 * std::sqrt(p.n())), DomainError);
    p.g = 0.6;
    CHECK_THROWS_AS(energy_of_beta(p, std::sqrt(0.5 * p.n())), DomainError);
    CHECK_THROWS_AS(minimize(p), CollapseError);
    p.g = 0.5;
    CHECK_THROWS_AS(minimize(p), CollapseError);
}

TEST_CASE("linear extension lifts the branch degeneracy") {
    ModelParams p = reference_params();
    p.g1 = 0.05;
    const LinearExtensionSolution sol = solve_linear_extension(p);
    CHECK_FALSE(sol.degenerate);
    CHECK(sol.beta_branches.size() == 1);
    CHECK(sol.a_mean ==
          doctest::Approx(-sol.g1_beta / (p.omega + 2.0 * sol.g2_beta))
              .epsilon(1e-12));
    // with the linear term the energy sits below the symmetric solution
    CHECK(sol.e_ground_ext < minimize(reference_params()).e_ground);
}

TEST_CASE("linear extension with g1 = 0 restores the symmetric result") {
    ModelParams p = reference_params();
    p.g1 = 0.0;
    const LinearExtensionSolution sol = solve_linear_extension(p);
    const MeanFieldSolution mf = minimize(reference_params());
    CHECK(sol.degenerate);
    CHECK(sol.beta_branches.size() == 2);
    CHECK(std::abs(sol.beta_selected) ==
          doctest::Approx(mf.beta).epsilon(1e-8));
    CHECK(sol.g1_beta == 0.0);
    CHECK(sol.a_mean == 0.0);
    CHECK(sol.e_ground_ext == doctest::Approx(mf.e_ground).epsilon(1e-12));
}

TEST_CASE("squeezing sign follows the effective coupling") {
    const ModelParams p = reference_params();
    const MeanFieldSolution sol = minimize(p);
    CHECK(sol.g_beta > 0.0);
    CHECK(sol.r_a_mf > 0.0);
    CHECK(sol.r_a_mf ==
          doctest::Approx(0.5 * std::atanh(2.0 * sol.g_beta / p.omega))
              .epsilon(1e-14));
}
