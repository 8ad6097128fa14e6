#include "prescurv/report_json.hpp"

#include "prescurv/functional.hpp"
#include "prescurv/obj_io.hpp"

namespace prescurv {

void to_json(nlohmann::json& j, const DiagnosticsSnapshot& s) {
  j = nlohmann::json{{"laplacian_energy", s.laplacian_energy},
                     {"mean_value", s.mean_value},
                     {"sigma_tilde_norm", s.sigma_tilde_norm},
                     {"omega_masses", s.omega_masses},
                     {"B_terms", s.B_terms},
                     {"D_squared", s.D_squared},
                     {"gauss_bonnet_defect", s.gauss_bonnet_defect},
                     {"gauss_bonnet_constant", s.gauss_bonnet_constant}};
}

void to_json(nlohmann::json& j, const TrajectoryBounds& b) {
  j = nlohmann::json{{"C1", b.C1},
                     {"C_squared", b.C_squared},
                     {"D_squared", b.D_squared},
                     {"implied_bound", b.implied_bound},
                     {"within_implied_bound", b.within_implied_bound},
                     {"B1_B2_nonnegative", b.B1_B2_nonnegative},
                     {"B3_within_bound", b.B3_within_bound}};
}

void to_json(nlohmann::json& j, const IterationRecord& r) {
  j = nlohmann::json{{"iteration", r.iteration}, {"S", r.S},
                     {"b_inf", r.b_inf},         {"b_l2", r.b_l2},
                     {"step", r.step},           {"mean_value", r.mean_value},
                     {"laplacian_energy", r.laplacian_energy}};
}

std::string trace_csv(const SolveReport& report) {
  std::string out = "iteration,S,b_inf,b_l2,step,mean_value,laplacian_energy\n";
  for (const IterationRecord& r : report.trace) {
    out += std::to_string(r.iteration);
    for (double v : {r.S, r.b_inf, r.b_l2, r.step, r.mean_value, r.laplacian_energy}) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

std::string diagnostics_jsonl(const SolveReport& report) {
  std::string out;
  for (std::size_t k = 0; k < report.diagnostics.size(); ++k) {
    nlohmann::json j = report.diagnostics[k];
    j["iteration"] = report.trace[k].iteration;
    out += j.dump() + "\n";
  }
  return out;
}

std::string sigma_csv(const BackgroundGeometry& geom, const TargetCurvature& target, const Field& sigma) {
  const Field achieved = curvature_of(geom, sigma);
  const Field b = residual(geom, target, sigma);
  std::string out = "vertex_index,sigma,K_target,K_achieved,b\n";
  for (int i = 0; i < geom.num_vertices; ++i)
    out += std::to_string(i) + "," + format_double(sigma[i]) + "," + format_double(target.K[i]) + "," +
           format_double(achieved[i]) + "," + format_double(b[i]) + "\n";
  return out;
}

}  // namespace prescurv
