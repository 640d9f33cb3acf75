#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tpdicke/io.hpp"

namespace {

using namespace tpdicke;

struct ParamOpts {
    double omega = 1.0;
    double omega_q = 0.0;
    double g = 0.0;
    long long n = 100;
    std::string coupling = "two";
    std::optional<double> g1;
    std::optional<double> lambda; // convenience: omega_q = omega/(2 lambda N)

    ModelParams resolve() const {
        ModelParams p;
        p.omega = omega;
        p.n_qubits = n;
        p.omega_q = lambda ? omega / (2.0 * *lambda * static_cast<double>(n))
                           : omega_q;
        p.g = g;
        p.coupling = coupling == "one" ? CouplingOrder::OnePhoton
                                       : CouplingOrder::TwoPhoton;
        p.g1 = g1;
        const ValidationReport report = validate(p);
        if (!report.ok()) {
            std::string msg = "invalid parameters:";
            for (const auto& v : report.violations) msg += " [" + v + "]";
            if (p.coupling == CouplingOrder::TwoPhoton && p.omega > 0.0 &&
                p.g >= 0.5 * p.omega && report.violations.size() == 1)
                throw CollapseError(msg);
            throw UsageError(msg);
        }
        return p;
    }
};

void add_param_options(CLI::App* cmd, ParamOpts& opts, bool need_g = true) {
    cmd->add_option("--omega", opts.omega, "bosonic mode frequency")
        ->capture_default_str();
    cmd->add_option("--omega-q", opts.omega_q, "qubit energy spacing");
    cmd->add_option("--lambda", [&opts](const CLI::results_t& res) {
            opts.lambda = std::stod(res[0]);
            return true;
        },
        "set omega_q via lambda = omega/(2 omega_q N)");
    cmd->add_option("--n", opts.n, "number of qubits N")->capture_default_str();
    if (need_g) cmd->add_option("--g", opts.g, "coupling strength");
    cmd->add_option("--coupling", opts.coupling, "one | two")
        ->check(CLI::IsMember({"one", "two"}))
        ->capture_default_str();
    cmd->add_option("--g1", [&opts](const CLI::results_t& res) {
            opts.g1 = std::stod(res[0]);
            return true;
        },
        "linear coupling strength (extension)");
}

struct OutputOpts {
    std::string path;
    std::string format; // empty = subcommand default
};

void add_output_options(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--output,-o", out.path, "output file (default: stdout)");
    cmd->add_option("--format", out.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

template <typename Writer>
void emit(const OutputOpts& out, Writer&& writer) {
    if (out.path.empty()) {
        writer(std::cout);
    } else {
        std::ofstream os(out.path);
        if (!os) throw UsageError("cannot open output file: " + out.path);
        writer(os);
    }
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    std::vector<double> grid;
    for (int i = 0; i < points; ++i)
        grid.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1.0));
    return grid;
}

int run_app(int argc, char** argv) {
    CLI::App app{"two-photon Dicke model laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config")->configurable(false);
    app.allow_config_extras(false);

    // --- meanfield ---
    auto* cmd_mf = app.add_subcommand("meanfield", "mean-field ground state");
    ParamOpts mf_params;
    OutputOpts mf_out;
    add_param_options(cmd_mf, mf_params);
    add_output_options(cmd_mf, mf_out);
    cmd_mf->callback([&] {
        const ModelParams p = mf_params.resolve();
        json j;
        j["params"] = p;
        j["derived"] = derive(p);
        j["regime"] = to_string(regime_classify(p));
        j["meanfield"] = minimize(p);
        if (p.g1) j["linear_extension"] = solve_linear_extension(p);
        emit(mf_out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    });

    // --- fluctuations ---
    auto* cmd_fl = app.add_subcommand("fluctuations", "beyond-mean-field layer");
    ParamOpts fl_params;
    OutputOpts fl_out;
    double fl_guard = 0.1;
    add_param_options(cmd_fl, fl_params);
    add_output_options(cmd_fl, fl_out);
    cmd_fl->add_option("--guard", fl_guard, "near-critical guard scale (per 1/N)")
        ->capture_default_str();
    cmd_fl->callback([&] {
        const ModelParams p = fl_params.resolve();
        const FluctuationOptions opts{fl_guard};
        const MeanFieldSolution mf = minimize(p);
        const FluctuationSolution fl = solve_fluctuations(p, opts);
        json j;
        j["params"] = p;
        j["meanfield"] = mf;
        j["fluctuations"] = fl;
        j["spin_fluctuations"] = spin_fluctuations(p, fl, mf);
        emit(fl_out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
    });

    // --- sweep ---
    auto* cmd_sw = app.add_subcommand("sweep", "coupling sweep");
    ParamOpts sw_params;
    OutputOpts sw_out;
    double sw_gmin = 0.0, sw_gmax = -1.0;
    int sw_points = 200;
    std::string sw_track = "analytic";
    int sw_cutoff = 200, sw_k = 2;
    std::string sw_parity = "both";
    add_param_options(cmd_sw, sw_params, /*need_g=*/false);
    add_output_options(cmd_sw, sw_out);
    cmd_sw->add_option("--g-min", sw_gmin)->capture_default_str();
    cmd_sw->add_option("--g-max", sw_gmax, "default 0.49 omega");
    cmd_sw->add_option("--points", sw_points)->capture_default_str();
    cmd_sw->add_option("--track", sw_track, "analytic | ed | both")
        ->check(CLI::IsMember({"analytic", "ed", "both"}))
        ->capture_default_str();
    cmd_sw->add_option("--cutoff", sw_cutoff, "Fock cutoff for the ed track")
        ->capture_default_str();
    cmd_sw->add_option("--k", sw_k, "eigenpairs per ed point")->capture_default_str();
    cmd_sw->add_option("--parity", sw_parity, "even | odd | both")
        ->check(CLI::IsMember({"even", "odd", "both"}))
        ->capture_default_str();
    cmd_sw->callback([&] {
        ParamOpts base = sw_params;
        base.g = 0.0;
        if (!base.lambda && base.omega_q == 0.0) base.lambda = 1.0;
        const ModelParams p = base.resolve();
        const double gmax = sw_gmax < 0.0 ? 0.49 * p.omega : sw_gmax;
        SweepTracks tracks;
        tracks.analytic = sw_track != "ed";
        tracks.ed = sw_track != "analytic";
        std::optional<BasisSpec> basis;
        SolveOptions ed_opts;
        if (tracks.ed) {
            basis = BasisSpec{p.n_qubits, sw_cutoff,
                              sw_parity == "even"  ? ParitySector::Even
                              : sw_parity == "odd" ? ParitySector::Odd
                                                   : ParitySector::Both};
            ed_opts.k = sw_k;
        }
        const SweepResult result = sweep_g(p, linear_grid(sw_gmin, gmax, sw_points),
                                           tracks, basis, {}, ed_opts);
        const std::string fmt = sw_out.format.empty() ? "csv" : sw_out.format;
        emit(sw_out, [&](std::ostream& os) {
            if (fmt == "csv") write_sweep_csv(result, os);
            else os << json(result).dump(2) << '\n';
        });
    });

    // --- ed ---
    auto* cmd_ed = app.add_subcommand("ed", "exact diagonalization");
    ParamOpts ed_params;
    OutputOpts ed_out;
    int ed_cutoff = 200, ed_k = 6;
    std::vector<int> ed_cutoffs;
    std::string ed_parity = "both", ed_dump;
    double ed_tol = 1e-9;
    add_param_options(cmd_ed, ed_params);
    add_output_options(cmd_ed, ed_out);
    cmd_ed->add_option("--cutoff", ed_cutoff)->capture_default_str();
    cmd_ed->add_option("--cutoffs", ed_cutoffs,
                       "ascending cutoffs for a convergence scan")
        ->delimiter(',');
    cmd_ed->add_option("--k", ed_k)->capture_default_str();
    cmd_ed->add_option("--parity", ed_parity, "even | odd | both")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    cmd_ed->add_option("--tol", ed_tol, "convergence tolerance")->capture_default_str();
    cmd_ed->add_option("--dump-matrix", ed_dump,
                       "write the Hamiltonian as 'row col value' lines");
    cmd_ed->callback([&] {
        ParamOpts base = ed_params;
        ModelParams p;
        try {
            p = base.resolve();
        } catch (const CollapseError&) {
            // The oracle may probe g >= omega/2 on purpose.
            p.omega = base.omega;
            p.omega_q = base.omega_q;
            p.g = base.g;
            p.n_qubits = base.n;
            p.coupling = base.coupling == "one" ? CouplingOrder::OnePhoton
                                                : CouplingOrder::TwoPhoton;
        }
        BasisSpec basis{p.n_qubits, ed_cutoff,
                        ed_parity == "even"  ? ParitySector::Even
                        : ed_parity == "odd" ? ParitySector::Odd
                                             : ParitySector::Both};
        if (!ed_dump.empty()) {
            std::ofstream os(ed_dump);
            if (!os) throw UsageError("cannot open " + ed_dump);
            dump_coo(build_hamiltonian(p, basis), os);
        }
        EDResult result;
        if (ed_cutoffs.empty()) {
            result = solve_lowest(p, basis, ed_k);
        } else {
            result = convergence_scan(p, basis, ed_k, ed_cutoffs, ed_tol);
        }
        const std::string fmt = ed_out.format.empty() ? "json" : ed_out.format;
        json j;
        j["params"] = p;
        j["result"] = result;
        emit(ed_out, [&](std::ostream& os) {
            if (fmt == "csv") write_ed_scan_csv(result, os);
            else os << j.dump(2) << '\n';
        });
    });

    // --- exponents ---
    auto* cmd_ex = app.add_subcommand(
        "exponents", "critical-exponent fits vs the reference table");
    ParamOpts ex_params;
    OutputOpts ex_out;
    int ex_points = 16;
    FitWindow ex_window;
    add_param_options(cmd_ex, ex_params, /*need_g=*/false);
    add_output_options(cmd_ex, ex_out);
    cmd_ex->add_option("--points-per-side", ex_points)->capture_default_str();
    cmd_ex->add_option("--delta-min", ex_window.delta_min)->capture_default_str();
    cmd_ex->add_option("--delta-max", ex_window.delta_max)->capture_default_str();
    bool ex_failed = false;
    cmd_ex->callback([&] {
        ParamOpts base = ex_params;
        base.g = 0.0;
        if (!base.lambda && base.omega_q == 0.0) base.lambda = 1.0;
        const ModelParams p = base.resolve();
        const auto grid = critical_grid(p, FitSide::Below, ex_window, ex_points);
        const SweepResult sweep = sweep_g(p, grid);
        std::vector<ExponentFit> fits{
            fit_exponent(sweep, CriticalObservable::Eexc, FitSide::Below, ex_window),
            fit_exponent(sweep, CriticalObservable::VarXd, FitSide::Below, ex_window),
            fit_exponent(sweep, CriticalObservable::VarXa, FitSide::Below, ex_window)};
        const Table1Report report = compare_table1(fits);
        std::cout << "observable  fitted      two-photon  one-photon  verdict\n";
        for (const auto& row : report.rows) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-10s  %+.5f    %+.2f       %+.2f       %s\n",
                          row.observable.c_str(), row.fitted.value_or(0.0),
                          row.ref_two_photon, row.ref_one_photon,
                          row.pass ? "PASS" : "FAIL");
            std::cout << buf;
        }
        std::cout << "(one-photon column: reference constants; fitted values are "
                     "two-photon analytic)\n";
        if (!ex_out.path.empty()) {
            json j;
            j["fits"] = fits;
            j["report"] = report;
            emit(ex_out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
        }
        ex_failed = !report.all_pass;
    });

    // --- collapse ---
    auto* cmd_cp = app.add_subcommand("collapse", "level-spacing probe toward g = omega/2");
    ParamOpts cp_params;
    OutputOpts cp_out;
    double cp_gmin = 0.1, cp_gmax = 0.47;
    int cp_points = 10, cp_cutoff = 400, cp_k = 10;
    add_param_options(cmd_cp, cp_params, /*need_g=*/false);
    add_output_options(cmd_cp, cp_out);
    cmd_cp->add_option("--g-min", cp_gmin)->capture_default_str();
    cmd_cp->add_option("--g-max", cp_gmax)->capture_default_str();
    cmd_cp->add_option("--points", cp_points)->capture_default_str();
    cmd_cp->add_option("--cutoff", cp_cutoff)->capture_default_str();
    cmd_cp->add_option("--k", cp_k)->capture_default_str();
    cmd_cp->callback([&] {
        ParamOpts base = cp_params;
        base.g = 0.0;
        const ModelParams p = base.resolve();
        BasisSpec basis{p.n_qubits, cp_cutoff, ParitySector::Both};
        const CollapseProbe probe = collapse_probe(
            p, basis, cp_k, linear_grid(cp_gmin, cp_gmax, cp_points));
        const std::string fmt = cp_out.format.empty() ? "csv" : cp_out.format;
        emit(cp_out, [&](std::ostream& os) {
            if (fmt == "csv") write_collapse_csv(probe, os);
            else os << json(probe).dump(2) << '\n';
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return ex_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const tpdicke::UsageError& err) {
        std::cerr << "usage error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
