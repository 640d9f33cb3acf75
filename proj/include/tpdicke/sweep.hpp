#ifndef TPDICKE_SWEEP_HPP
#define TPDICKE_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpdicke/ed.hpp"
#include "tpdicke/fluctuations.hpp"
#include "tpdicke/meanfield.hpp"

namespace tpdicke {

struct SweepTracks {
    bool analytic = true;
    bool ed = false;
};

struct EDPointSummary {
    double e0 = 0.0;
    double e1 = 0.0;
    double n_photon = 0.0;
    double jz = 0.0;
};

struct SweepPoint {
    double g = 0.0;
    RegimeLabel phase = RegimeLabel::Normal;
    std::optional<MeanFieldSolution> mf;
    std::optional<FluctuationSolution> fl;
    std::optional<EDPointSummary> ed;
    bool guarded = false;   // analytic track refused: inside guard band
    std::string error;      // non-guard per-point failure, sweep continues
};

struct SweepResult {
    std::string axis = "g";
    std::vector<double> grid;
    std::vector<SweepPoint> points;
    ModelParams params_base;
};

SweepResult sweep_g(const ModelParams& params_base,
                    const std::vector<double>& g_grid,
                    const SweepTracks& tracks = {},
                    const std::optional<BasisSpec>& basis = {},
                    const FluctuationOptions& fl_opts = {},
                    const SolveOptions& ed_opts = {});

enum class CriticalObservable { Eexc, VarXd, VarXa };
enum class FitSide { Below, Above };

struct FitWindow {
    double delta_min = 1e-3; // relative distance from g_t
    double delta_max = 1e-1;
};

struct ExponentFit {
    CriticalObservable observable = CriticalObservable::Eexc;
    FitSide side = FitSide::Below;
    double gamma = 0.0;
    FitWindow window;
    double r_squared = 0.0;
    double reference = 0.0; // Table-of-exponents value, two-photon column
    int n_points = 0;
};

/// log|A| vs log(delta) least squares over in-window analytic points.
/// Quadrature observables are fitted as standard deviations (sqrt of the
/// variance), matching how the reference exponents are quoted.
ExponentFit fit_exponent(const SweepResult& sweep, CriticalObservable obs,
                         FitSide side, const FitWindow& window = {});

/// Log-uniform grid of couplings at relative distances [delta_min, delta_max]
/// from g_t on the requested side.
std::vector<double> critical_grid(const ModelParams& params, FitSide side,
                                  const FitWindow& window, int points_per_side);

struct Table1Row {
    std::string observable;
    std::optional<double> fitted;
    double ref_two_photon = 0.0;
    double ref_one_photon = 0.0;
    bool pass = false;
    std::string note;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    bool all_pass = false;
    bool complete = false;
};

Table1Report compare_table1(const std::vector<ExponentFit>& fits);

const char* to_string(CriticalObservable obs);
const char* to_string(FitSide side);

} // namespace tpdicke

#endif
