#include "tpdicke/model.hpp"

#include <cmath>

namespace tpdicke {

ValidationReport validate(const ModelParams& params) {
    ValidationReport report;
    if (!(params.omega > 0.0)) report.violations.push_back("omega <= 0");
    if (!(params.omega_q > 0.0)) report.violations.push_back("omega_q <= 0");
    if (!(params.g >= 0.0)) report.violations.push_back("g < 0");
    if (params.n_qubits < 1) report.violations.push_back("n_qubits < 1");
    if (params.coupling == CouplingOrder::TwoPhoton && params.omega > 0.0 &&
        params.g >= 0.5 * params.omega) {
        report.violations.push_back("g >= omega/2: model unbounded");
    }
    return report;
}

DerivedParams derive(const ModelParams& params) {
    DerivedParams d;
    d.lambda = params.omega / (2.0 * params.omega_q * params.n());
    d.mu = 4.0 * params.g * params.g / (params.omega * params.omega);
    d.g_t = 0.5 * std::sqrt(params.omega * params.omega_q * params.n());
    d.g_collapse = 0.5 * params.omega;
    return d;
}

RegimeLabel regime_classify(const ModelParams& params) {
    const DerivedParams d = derive(params);
    if (params.g >= d.g_collapse) return RegimeLabel::Collapsed;
    if (params.omega_q * params.n() >= params.omega) return RegimeLabel::NoSPTWindow;
    return params.g < d.g_t ? RegimeLabel::Normal : RegimeLabel::Superradiant;
}

const char* to_string(RegimeLabel label) {
    switch (label) {
        case RegimeLabel::Normal: return "normal";
        case RegimeLabel::Superradiant: return "superradiant";
        case RegimeLabel::Collapsed: return "collapsed";
        case RegimeLabel::NoSPTWindow: return "no-spt-window";
    }
    return "?";
}

const char* to_string(CouplingOrder order) {
    return order == CouplingOrder::OnePhoton ? "one-photon" : "two-photon";
}

} // namespace tpdicke
