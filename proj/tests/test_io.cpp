#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "tpdicke/io.hpp"

using namespace tpdicke;

TEST_CASE("model params round-trip through json") {
    ModelParams p;
    p.omega = 1.25;
    p.omega_q = 0.004;
    p.g = 0.31;
    p.n_qubits = 64;
    p.coupling = CouplingOrder::OnePhoton;
    p.g1 = 0.02;

    const json j = p;
    const ModelParams q = j.get<ModelParams>();
    CHECK(q.omega == p.omega);
    CHECK(q.omega_q == p.omega_q);
    CHECK(q.g == p.g);
    CHECK(q.n_qubits == p.n_qubits);
    CHECK(q.coupling == p.coupling);
    REQUIRE(q.g1.has_value());
    CHECK(*q.g1 == *p.g1);

    p.g1.reset();
    p.coupling = CouplingOrder::TwoPhoton;
    const ModelParams r = json(p).get<ModelParams>();
    CHECK_FALSE(r.g1.has_value());
    CHECK(r.coupling == CouplingOrder::TwoPhoton);
}

TEST_CASE("solutions round-trip through json") {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.005;
    p.n_qubits = 100;
    p.g = 0.45;

    const MeanFieldSolution mf = minimize(p);
    const MeanFieldSolution mf2 = json(mf).get<MeanFieldSolution>();
    CHECK(mf2.beta == mf.beta);
    CHECK(mf2.beta_branches == mf.beta_branches);
    CHECK(mf2.g_beta == mf.g_beta);
    CHECK(mf2.r_a_mf == mf.r_a_mf);
    CHECK(mf2.e_ground == mf.e_ground);
    CHECK(mf2.jz_mean == mf.jz_mean);
    CHECK(mf2.jx_mean == mf.jx_mean);

    const FluctuationSolution fl = solve_fluctuations(p);
    const FluctuationSolution fl2 = json(fl).get<FluctuationSolution>();
    CHECK(fl2.phase == fl.phase);
    CHECK(fl2.r_s == fl.r_s);
    CHECK(fl2.r_a == fl.r_a);
    CHECK(fl2.e_exc == fl.e_exc);
    CHECK(fl2.e_ground == fl.e_ground);
    CHECK(fl2.var_xd == fl.var_xd);
    CHECK(fl2.var_pd == fl.var_pd);
    CHECK(fl2.var_xa == fl.var_xa);
    CHECK(fl2.var_pa == fl.var_pa);
    CHECK(fl2.beta_correction == fl.beta_correction);
}

TEST_CASE("sweep json carries the schema tag") {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.005;
    p.n_qubits = 100;
    const SweepResult sweep = sweep_g(p, {0.1, 0.45});
    const json j = sweep;
    CHECK(j.at("schema") == "tpdicke.sweep.v1");
    CHECK(j.at("axis") == "g");
    CHECK(j.at("points").size() == 2);
    CHECK(j.at("points")[1].contains("meanfield"));
}

TEST_CASE("sweep csv schema and shape") {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.005;
    p.n_qubits = 100;
    const SweepResult sweep = sweep_g(p, {0.1, 0.3, 0.45});
    std::ostringstream os;
    write_sweep_csv(sweep, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "# schema: tpdicke.sweep.v1");
    std::getline(is, line);
    CHECK(line == "g,phase,beta,e_exc_over_omega_q,var_xd,var_xa,r_a,r_s,guarded");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == 3);
}

TEST_CASE("ed and collapse csv writers") {
    EDResult result;
    result.convergence_history = {{40, -1.0}, {80, -1.1}, {160, -1.11}};
    std::ostringstream os;
    write_ed_scan_csv(result, os);
    CHECK(os.str().rfind("# schema: tpdicke.ed-scan.v1\ncutoff,e0\n40,", 0) == 0);

    CollapseProbe probe;
    probe.g_values = {0.2, 0.3};
    probe.mean_spacing = {0.9, 0.7};
    probe.mean_spacing_check = {0.9, 0.71};
    probe.cutoff = 200;
    probe.cutoff_check = 100;
    std::ostringstream os2;
    write_collapse_csv(probe, os2);
    std::istringstream is(os2.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "# schema: tpdicke.collapse.v1");
    std::getline(is, line);
    CHECK(line == "g,mean_spacing,mean_spacing_half_cutoff");
}

TEST_CASE("full precision serialization") {
    ModelParams p;
    p.omega = 1.0;
    p.omega_q = 0.005;
    p.n_qubits = 100;
    const SweepResult sweep = sweep_g(p, {1.0 / 3.0});
    std::ostringstream os;
    write_sweep_csv(sweep, os);
    CHECK(os.str().find("0.33333333333333331") != std::string::npos);
}
