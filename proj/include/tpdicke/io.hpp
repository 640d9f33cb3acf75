#ifndef TPDICKE_IO_HPP
#define TPDICKE_IO_HPP

#include <iosfwd>
#include <nlohmann/json.hpp>

#include "tpdicke/ed.hpp"
#include "tpdicke/fluctuations.hpp"
#include "tpdicke/meanfield.hpp"
#include "tpdicke/sweep.hpp"

namespace tpdicke {

using nlohmann::json;

void to_json(json& j, const ModelParams& v);
void from_json(const json& j, ModelParams& v);
void to_json(json& j, const DerivedParams& v);
void to_json(json& j, const MeanFieldSolution& v);
void from_json(const json& j, MeanFieldSolution& v);
void to_json(json& j, const LinearExtensionSolution& v);
void to_json(json& j, const FluctuationSolution& v);
void from_json(const json& j, FluctuationSolution& v);
void to_json(json& j, const SpinFluctuations& v);
void to_json(json& j, const StateObservables& v);
void to_json(json& j, const EDResult& v);
void to_json(json& j, const CollapseProbe& v);
void to_json(json& j, const SweepPoint& v);
void to_json(json& j, const SweepResult& v);
void to_json(json& j, const ExponentFit& v);
void to_json(json& j, const Table1Report& v);

/// Fixed-schema sweep CSV; a schema comment line and a header row always lead.
void write_sweep_csv(const SweepResult& sweep, std::ostream& os);
void write_ed_scan_csv(const EDResult& result, std::ostream& os);
void write_collapse_csv(const CollapseProbe& probe, std::ostream& os);

} // namespace tpdicke

#endif
