#include "tpdicke/io.hpp"

#include <iomanip>
#include <ostream>

namespace tpdicke {

namespace {

RegimeLabel regime_from_string(const std::string& s) {
    if (s == "normal") return RegimeLabel::Normal;
    if (s == "superradiant") return RegimeLabel::Superradiant;
    if (s == "collapsed") return RegimeLabel::Collapsed;
    if (s == "no-spt-window") return RegimeLabel::NoSPTWindow;
    throw DomainError("unknown regime label: " + s);
}

} // namespace

void to_json(json& j, const ModelParams& v) {
    j = json{{"omega", v.omega},
             {"omega_q", v.omega_q},
             {"g", v.g},
             {"n_qubits", v.n_qubits},
             {"coupling", to_string(v.coupling)}};
    if (v.g1) j["g1"] = *v.g1;
}

void from_json(const json& j, ModelParams& v) {
    j.at("omega").get_to(v.omega);
    j.at("omega_q").get_to(v.omega_q);
    j.at("g").get_to(v.g);
    j.at("n_qubits").get_to(v.n_qubits);
    const std::string c = j.value("coupling", "two-photon");
    v.coupling = c == "one-photon" ? CouplingOrder::OnePhoton
                                   : CouplingOrder::TwoPhoton;
    if (j.contains("g1")) v.g1 = j["g1"].get<double>();
    else v.g1.reset();
}

void to_json(json& j, const DerivedParams& v) {
    j = json{{"lambda", v.lambda},
             {"mu", v.mu},
             {"g_t", v.g_t},
             {"g_collapse", v.g_collapse}};
}

void to_json(json& j, const MeanFieldSolution& v) {
    j = json{{"beta", v.beta},          {"beta_branches", v.beta_branches},
             {"g_beta", v.g_beta},      {"r_a_mf", v.r_a_mf},
             {"e_ground", v.e_ground},  {"jz_mean", v.jz_mean},
             {"jx_mean", v.jx_mean}};
}

void from_json(const json& j, MeanFieldSolution& v) {
    j.at("beta").get_to(v.beta);
    j.at("beta_branches").get_to(v.beta_branches);
    j.at("g_beta").get_to(v.g_beta);
    j.at("r_a_mf").get_to(v.r_a_mf);
    j.at("e_ground").get_to(v.e_ground);
    j.at("jz_mean").get_to(v.jz_mean);
    j.at("jx_mean").get_to(v.jx_mean);
}

void to_json(json& j, const LinearExtensionSolution& v) {
    j = json{{"beta_selected", v.beta_selected},
             {"beta_branches", v.beta_branches},
             {"g1_beta", v.g1_beta},
             {"g2_beta", v.g2_beta},
             {"alpha_disp", v.alpha_disp},
             {"a_mean", v.a_mean},
             {"r_c", v.r_c},
             {"e_ground_ext", v.e_ground_ext},
             {"degenerate", v.degenerate}};
}

void to_json(json& j, const FluctuationSolution& v) {
    j = json{{"phase", to_string(v.phase)},
             {"r_s", v.r_s},
             {"r_a", v.r_a},
             {"e_exc", v.e_exc},
             {"e_ground", v.e_ground},
             {"var_xd", v.var_xd},
             {"var_pd", v.var_pd},
             {"var_xa", v.var_xa},
             {"var_pa", v.var_pa},
             {"beta_correction", v.beta_correction}};
}

void from_json(const json& j, FluctuationSolution& v) {
    v.phase = regime_from_string(j.at("phase").get<std::string>());
    j.at("r_s").get_to(v.r_s);
    j.at("r_a").get_to(v.r_a);
    j.at("e_exc").get_to(v.e_exc);
    j.at("e_ground").get_to(v.e_ground);
    j.at("var_xd").get_to(v.var_xd);
    j.at("var_pd").get_to(v.var_pd);
    j.at("var_xa").get_to(v.var_xa);
    j.at("var_pa").get_to(v.var_pa);
    j.at("beta_correction").get_to(v.beta_correction);
}

void to_json(json& j, const SpinFluctuations& v) {
    j = json{{"jx_mean", v.jx_mean}, {"jy_mean", v.jy_mean},
             {"jz_mean", v.jz_mean}, {"var_jx", v.var_jx},
             {"var_jy", v.var_jy},   {"var_jz", v.var_jz}};
}

void to_json(json& j, const StateObservables& v) {
    j = json{{"n_photon", v.n_photon},
             {"jz", v.jz},
             {"jx", v.jx},
             {"var_xa", v.var_xa},
             {"var_pa", v.var_pa}};
}

void to_json(json& j, const EDResult& v) {
    j = json{{"eigenvalues", v.eigenvalues},
             {"observables", v.observables},
             {"cutoff_used", v.cutoff_used},
             {"converged", v.converged}};
    json hist = json::array();
    for (const auto& [cutoff, e0] : v.convergence_history)
        hist.push_back(json{{"cutoff", cutoff}, {"e0", e0}});
    j["convergence_history"] = hist;
}

void to_json(json& j, const CollapseProbe& v) {
    j = json{{"g_values", v.g_values},
             {"mean_spacing", v.mean_spacing},
             {"cutoff", v.cutoff},
             {"cutoff_check", v.cutoff_check},
             {"mean_spacing_check", v.mean_spacing_check}};
}

void to_json(json& j, const SweepPoint& v) {
    j = json{{"g", v.g}, {"phase", to_string(v.phase)}, {"guarded", v.guarded}};
    if (v.mf) j["meanfield"] = *v.mf;
    if (v.fl) j["fluctuations"] = *v.fl;
    if (v.ed)
        j["ed"] = json{{"e0", v.ed->e0},
                       {"e1", v.ed->e1},
                       {"n_photon", v.ed->n_photon},
                       {"jz", v.ed->jz}};
    if (!v.error.empty()) j["error"] = v.error;
}

void to_json(json& j, const SweepResult& v) {
    j = json{{"schema", "tpdicke.sweep.v1"},
             {"axis", v.axis},
             {"grid", v.grid},
             {"params", v.params_base},
             {"points", v.points}};
}

void to_json(json& j, const ExponentFit& v) {
    j = json{{"observable", to_string(v.observable)},
             {"side", to_string(v.side)},
             {"gamma", v.gamma},
             {"delta_min", v.window.delta_min},
             {"delta_max", v.window.delta_max},
             {"r_squared", v.r_squared},
             {"reference", v.reference},
             {"n_points", v.n_points}};
}

void to_json(json& j, const Table1Report& v) {
    json rows = json::array();
    for (const auto& row : v.rows) {
        json r{{"observable", row.observable},
               {"ref_two_photon", row.ref_two_photon},
               {"ref_one_photon", row.ref_one_photon},
               {"pass", row.pass},
               {"note", row.note}};
        if (row.fitted) r["fitted"] = *row.fitted;
        rows.push_back(r);
    }
    j = json{{"rows", rows}, {"all_pass", v.all_pass}, {"complete", v.complete}};
}

namespace {
std::ostream& full_precision(std::ostream& os) {
    return os << std::setprecision(17);
}
} // namespace

void write_sweep_csv(const SweepResult& sweep, std::ostream& os) {
    os << "# schema: tpdicke.sweep.v1\n";
    os << "g,phase,beta,e_exc_over_omega_q,var_xd,var_xa,r_a,r_s,guarded\n";
    full_precision(os);
    const double wq = sweep.params_base.omega_q;
    for (const SweepPoint& pt : sweep.points) {
        os << pt.g << ',' << to_string(pt.phase) << ',';
        if (pt.mf) os << pt.mf->beta;
        os << ',';
        if (pt.fl)
            os << pt.fl->e_exc / wq << ',' << pt.fl->var_xd << ','
               << pt.fl->var_xa << ',' << pt.fl->r_a << ',' << pt.fl->r_s;
        else
            os << ",,,,";
        os << ',' << (pt.guarded ? 1 : 0) << '\n';
    }
}

void write_ed_scan_csv(const EDResult& result, std::ostream& os) {
    os << "# schema: tpdicke.ed-scan.v1\n";
    os << "cutoff,e0\n";
    full_precision(os);
    for (const auto& [cutoff, e0] : result.convergence_history)
        os << cutoff << ',' << e0 << '\n';
}

void write_collapse_csv(const CollapseProbe& probe, std::ostream& os) {
    os << "# schema: tpdicke.collapse.v1\n";
    os << "g,mean_spacing,mean_spacing_half_cutoff\n";
    full_precision(os);
    for (size_t i = 0; i < probe.g_values.size(); ++i)
        os << probe.g_values[i] << ',' << probe.mean_spacing[i] << ','
           << probe.mean_spacing_check[i] << '\n';
}

} // namespace tpdicke
