#pragma once

#include <json.hpp>

#include "prescurv/diagnostics.hpp"
#include "prescurv/solver.hpp"

namespace prescurv {

void to_json(nlohmann::json& j, const DiagnosticsSnapshot& s);
void to_json(nlohmann::json& j, const TrajectoryBounds& b);
void to_json(nlohmann::json& j, const IterationRecord& r);

/// Fixed column order: iteration,S,b_inf,b_l2,step,mean_value,laplacian_energy
std::string trace_csv(const SolveReport& report);

/// One DiagnosticsSnapshot object per line, tagged with its iteration.
std::string diagnostics_jsonl(const SolveReport& report);

/// Rows `vertex_index,sigma,K_target,K_achieved,b`.
std::string sigma_csv(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma);

}  // namespace prescurv
