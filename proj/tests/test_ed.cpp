#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>

#include "tpdicke/ed.hpp"

using namespace tpdicke;

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

// Second, structurally independent Hamiltonian builder: dense operators
// combined by Kronecker products, full Fock ladder, no index rules.
Eigen::MatrixXd kron_hamiltonian(const ModelParams& p, int cutoff) {
    const long long nq = p.n_qubits;
    const double j = 0.5 * static_cast<double>(nq);
    const Eigen::Index sdim = nq + 1;
    const Eigen::Index pdim = cutoff + 1;

    Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(sdim, sdim);
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(sdim, sdim);
    for (Eigen::Index mi = 0; mi < sdim; ++mi) {
        const double m = -j + static_cast<double>(mi);
        jz(mi, mi) = m;
        if (mi + 1 < sdim)
            jp(mi + 1, mi) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    Eigen::MatrixXd adag = Eigen::MatrixXd::Zero(pdim, pdim);
    for (Eigen::Index n = 0; n + 1 < pdim; ++n)
        adag(n + 1, n) = std::sqrt(n + 1.0);
    const Eigen::MatrixXd a = adag.transpose();
    const Eigen::MatrixXd num = adag * a;

    const Eigen::MatrixXd spin_i = Eigen::MatrixXd::Identity(sdim, sdim);
    const Eigen::MatrixXd phot_i = Eigen::MatrixXd::Identity(pdim, pdim);
    const Eigen::MatrixXd jx2 = jp + jp.transpose();
    const Eigen::MatrixXd field = p.coupling == CouplingOrder::TwoPhoton
                                      ? Eigen::MatrixXd(a * a + adag * adag)
                                      : Eigen::MatrixXd(a + adag);
    return p.omega * kron(spin_i, num) + p.omega_q * kron(jz, phot_i) +
           p.g / static_cast<double>(nq) * kron(jx2, field);
}

ModelParams small_params(double g, CouplingOrder order = CouplingOrder::TwoPhoton) {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.2;
    p.n_qubits = 2;
    p.g = g;
    p.coupling = order;
    return p;
}

} // namespace

TEST_CASE("basis bookkeeping") {
    BasisSpec both{2, 6, ParitySector::Both};
    CHECK(both.dimension() == 3 * 7);
    BasisSpec even{2, 6, ParitySector::Even};
    CHECK(even.fock_values() == std::vector<int>{0, 2, 4, 6});
    BasisSpec odd{2, 6, ParitySector::Odd};
    CHECK(odd.fock_values() == std::vector<int>{1, 3, 5});
}

TEST_CASE("index-rule builder matches the kron builder") {
    for (auto order : {CouplingOrder::TwoPhoton, CouplingOrder::OnePhoton}) {
        const ModelParams p = small_params(0.2, order);
        BasisSpec basis{p.n_qubits, 60, ParitySector::Both};
        const Eigen::MatrixXd sparse_h =
            Eigen::MatrixXd(build_hamiltonian(p, basis));
        const Eigen::MatrixXd dense_h = kron_hamiltonian(p, 60);
        CHECK((sparse_h - dense_h).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("hamiltonian is exactly symmetric") {
    const ModelParams p = small_params(0.3);
    for (auto parity : {ParitySector::Both, ParitySector::Even, ParitySector::Odd}) {
        BasisSpec basis{p.n_qubits, 40, parity};
        const Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(p, basis));
        CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("photon-parity cross blocks vanish identically") {
    const ModelParams p = small_params(0.3);
    BasisSpec basis{p.n_qubits, 30, ParitySector::Both};
    const auto fock = basis.fock_values();
    const Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(p, basis));
    const Eigen::Index n_count = static_cast<Eigen::Index>(fock.size());
    for (Eigen::Index r = 0; r < h.rows(); ++r)
        for (Eigen::Index c = 0; c < h.cols(); ++c)
            if ((fock[r % n_count] + fock[c % n_count]) % 2 != 0)
                CHECK(h(r, c) == 0.0);
}

TEST_CASE("parity sectors partition the spectrum") {
    const ModelParams p = small_params(0.35);
    const int cutoff = 80;
    const auto both =
        solve_lowest(p, {p.n_qubits, cutoff, ParitySector::Both}, 4);
    const auto even =
        solve_lowest(p, {p.n_qubits, cutoff, ParitySector::Even}, 4);
    const auto odd = solve_lowest(p, {p.n_qubits, cutoff, ParitySector::Odd}, 4);
    std::vector<double> merged(even.eigenvalues);
    merged.insert(merged.end(), odd.eigenvalues.begin(), odd.eigenvalues.end());
    std::sort(merged.begin(), merged.end());
    for (int i = 0; i < 4; ++i)
        CHECK(both.eigenvalues[i] == doctest::Approx(merged[i]).epsilon(1e-11));
}

TEST_CASE("ground energy is variational-monotone in the cutoff") {
    ModelParams p = small_params(0.4);
    p.n_qubits = 4;
    double prev = 1e300;
    for (int cutoff : {20, 40, 80, 160}) {
        const auto res = solve_lowest(p, {p.n_qubits, cutoff, ParitySector::Both}, 1);
        CHECK(res.eigenvalues[0] <= prev + 1e-12);
        prev = res.eigenvalues[0];
    }
}

TEST_CASE("decoupled spectrum at g = 0") {
    const ModelParams p = small_params(0.0);
    const auto res = solve_lowest(p, {p.n_qubits, 20, ParitySector::Both}, 4);
    CHECK(res.eigenvalues[0] ==
          doctest::Approx(-0.5 * p.omega_q * p.n()).epsilon(1e-12));
    // next levels: raise the spin (0.2) or add a photon (1.0)
    CHECK(res.eigenvalues[1] == doctest::Approx(-0.2 + 0.2).epsilon(1e-10));
    CHECK(res.observables[0].n_photon == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(res.observables[0].jz == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(res.observables[0].var_xa == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.observables[0].var_pa == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("lanczos path agrees with the dense path") {
    ModelParams p = small_params(0.3);
    p.n_qubits = 3;
    BasisSpec basis{p.n_qubits, 40, ParitySector::Both};
    const auto dense = solve_lowest(p, basis, 4);
    SolveOptions force_lanczos;
    force_lanczos.dense_threshold = 1;
    const auto iter = solve_lowest(p, basis, 4, force_lanczos);
    for (int i = 0; i < 4; ++i)
        CHECK(iter.eigenvalues[i] ==
              doctest::Approx(dense.eigenvalues[i]).epsilon(1e-10));
    CHECK(iter.observables[0].n_photon ==
          doctest::Approx(dense.observables[0].n_photon).epsilon(1e-8));
}

TEST_CASE("lanczos on a random sparse symmetric matrix") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int dim = 300;
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        dense(i, i) = 2.0 * u(rng);
        for (int off = 1; off <= 5; ++off)
            if (i + off < dim) dense(i, i + off) = dense(i + off, i) = 0.3 * u(rng);
    }
    const Eigen::SparseMatrix<double> sparse = dense.sparseView();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    const auto lr = lanczos_lowest(sparse, 5);
    REQUIRE(lr.converged);
    for (int i = 0; i < 5; ++i)
        CHECK(lr.eigenvalues[i] ==
              doctest::Approx(es.eigenvalues()[i]).epsilon(1e-9));
}

TEST_CASE("superradiant quasi-degeneracy and symmetry breaking") {
    ModelParams p;
    p.omega = 1.0;
    p.n_qubits = 8;
    p.omega_q = 1.0 / 16.0; // lambda = 1
    p.g = 0.45;
    BasisSpec basis{p.n_qubits, 120, ParitySector::Both};
    const Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(p, basis));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const double split01 = es.eigenvalues()[1] - es.eigenvalues()[0];
    const double split12 = es.eigenvalues()[2] - es.eigenvalues()[1];
    CHECK(split01 < 0.1 * split12);

    const auto [jx_lo, jx_hi] = symmetry_broken_jx(
        p, basis, es.eigenvectors().col(0), es.eigenvectors().col(1));
    CHECK(jx_hi > 2.5);
    CHECK(jx_lo < -2.5);
    CHECK(jx_hi == doctest::Approx(-jx_lo).epsilon(1e-3));
}

TEST_CASE("convergence scan: discrete vs unbounded regions") {
    ModelParams p = small_params(0.2);
    p.omega_q = 0.1;
    BasisSpec basis{p.n_qubits, 0, ParitySector::Both};
    const auto ok = convergence_scan(p, basis, 1, {40, 80, 160});
    CHECK(ok.converged);
    CHECK(ok.convergence_history.size() == 3);

    p.g = 0.55; // beyond the collapse point: no bounded ground state
    const auto bad = convergence_scan(p, basis, 1, {40, 80, 160});
    CHECK_FALSE(bad.converged);
    // energies keep falling with the cutoff
    CHECK(bad.convergence_history[2].second <
          bad.convergence_history[0].second - 1.0);
}

TEST_CASE("collapse probe: level spacing shrinks toward g = omega/2") {
    ModelParams p = small_params(0.0);
    p.omega_q = 5.0; // push spin excitations out of the probed window
    BasisSpec basis{p.n_qubits, 200, ParitySector::Both};
    const auto probe = collapse_probe(p, basis, 6, {0.2, 0.35, 0.45});
    REQUIRE(probe.mean_spacing.size() == 3);
    CHECK(probe.mean_spacing[1] < probe.mean_spacing[0]);
    CHECK(probe.mean_spacing[2] < probe.mean_spacing[1]);
    CHECK(probe.cutoff_check == 100);
}

TEST_CASE("structural guards") {
    ModelParams p = small_params(0.2, CouplingOrder::OnePhoton);
    CHECK_THROWS_AS(build_hamiltonian(p, {p.n_qubits, 20, ParitySector::Even}),
                    DomainError);
    SolveOptions tiny_cap;
    tiny_cap.dimension_cap = 10;
    CHECK_THROWS_AS(
        build_hamiltonian(small_params(0.2), {2, 20, ParitySector::Both}, tiny_cap),
        DimensionError);
    CHECK_THROWS_AS(
        solve_lowest(small_params(0.2), {2, 2, ParitySector::Both}, 100),
        DimensionError);
    CHECK_THROWS_AS(convergence_scan(small_params(0.2),
                                     {2, 0, ParitySector::Both}, 1, {40, 80}),
                    DimensionError);
}

TEST_CASE("coo dump lists every stored entry") {
    const auto h = build_hamiltonian(small_params(0.2), {2, 10, ParitySector::Both});
    std::ostringstream os;
    dump_coo(h, os);
    std::istringstream is(os.str());
    int lines = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++lines;
    CHECK(lines == h.nonZeros());
}
