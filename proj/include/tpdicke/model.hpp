#ifndef TPDICKE_MODEL_HPP
#define TPDICKE_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpdicke/errors.hpp"

namespace tpdicke {

enum class CouplingOrder { OnePhoton, TwoPhoton };

/// Physical inputs of the model, hbar = 1 throughout.
struct ModelParams {
    double omega = 1.0;     // bosonic mode frequency
    double omega_q = 0.0;   // qubit energy spacing
    double g = 0.0;         // coupling strength
    long long n_qubits = 1; // N
    CouplingOrder coupling = CouplingOrder::TwoPhoton;
    std::optional<double> g1{}; // linear coupling, off by default

    double n() const { return static_cast<double>(n_qubits); }
};

/// Dimensionless combinations and the two special couplings.
struct DerivedParams {
    double lambda = 0.0;     // omega / (2 omega_q N)
    double mu = 0.0;         // 4 g^2 / omega^2
    double g_t = 0.0;        // sqrt(omega omega_q N) / 2
    double g_collapse = 0.0; // omega / 2
};

enum class RegimeLabel { Normal, Superradiant, Collapsed, NoSPTWindow };

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const ModelParams& params);
DerivedParams derive(const ModelParams& params);
RegimeLabel regime_classify(const ModelParams& params);

const char* to_string(RegimeLabel label);
const char* to_string(CouplingOrder order);

} // namespace tpdicke

#endif
