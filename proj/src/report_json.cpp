#include "gsqr/report_json.hpp"

#include <string>

namespace gsqr {

using nlohmann::json;

void to_json(json& j, const AssumptionReport& r) {
  j = json{{"kappa_r", r.kappa_r},
           {"epsilon", r.epsilon},
           {"lhs", r.lhs},
           {"satisfied", r.satisfied}};
}

void from_json(const json& j, AssumptionReport& r) {
  j.at("kappa_r").get_to(r.kappa_r);
  j.at("epsilon").get_to(r.epsilon);
  j.at("lhs").get_to(r.lhs);
  j.at("satisfied").get_to(r.satisfied);
}

void to_json(json& j, const PrefixAudit& r) {
  j = json{{"k", r.k},
           {"a_norm", r.a_norm},
           {"r_norm", r.r_norm},
           {"kappa_r", r.kappa_r},
           {"backward_error", r.backward_error},
           {"backward_bound", r.backward_bound},
           {"backward_pass", r.backward_pass},
           {"normal_residual", r.normal_residual},
           {"normal_bound", r.normal_bound},
           {"normal_pass", r.normal_pass},
           {"mu", r.mu},
           {"mu_bound", r.mu_bound},
           {"mu_pass", r.mu_pass},
           {"ortho_loss", r.ortho_loss},
           {"ortho_bound", r.ortho_bound},
           {"ortho_pass", r.ortho_pass},
           {"q_norm", r.q_norm},
           {"q_norm_bound", r.q_norm_bound},
           {"q_norm_pass", r.q_norm_pass},
           {"backward_error_fro", r.backward_error_fro},
           {"normal_residual_fro", r.normal_residual_fro},
           {"ortho_loss_fro", r.ortho_loss_fro}};
}

void from_json(const json& j, PrefixAudit& r) {
  j.at("k").get_to(r.k);
  j.at("a_norm").get_to(r.a_norm);
  j.at("r_norm").get_to(r.r_norm);
  j.at("kappa_r").get_to(r.kappa_r);
  j.at("backward_error").get_to(r.backward_error);
  j.at("backward_bound").get_to(r.backward_bound);
  j.at("backward_pass").get_to(r.backward_pass);
  j.at("normal_residual").get_to(r.normal_residual);
  j.at("normal_bound").get_to(r.normal_bound);
  j.at("normal_pass").get_to(r.normal_pass);
  j.at("mu").get_to(r.mu);
  j.at("mu_bound").get_to(r.mu_bound);
  j.at("mu_pass").get_to(r.mu_pass);
  j.at("ortho_loss").get_to(r.ortho_loss);
  j.at("ortho_bound").get_to(r.ortho_bound);
  j.at("ortho_pass").get_to(r.ortho_pass);
  j.at("q_norm").get_to(r.q_norm);
  j.at("q_norm_bound").get_to(r.q_norm_bound);
  j.at("q_norm_pass").get_to(r.q_norm_pass);
  j.at("backward_error_fro").get_to(r.backward_error_fro);
  j.at("normal_residual_fro").get_to(r.normal_residual_fro);
  j.at("ortho_loss_fro").get_to(r.ortho_loss_fro);
}

void to_json(json& j, const DiagnosticsReport& r) {
  j = json{{"algorithm", std::string(to_string(r.algorithm))},
           {"m", r.m},
           {"n", r.n},
           {"epsilon", r.epsilon},
           {"kappa_r_full", r.kappa_r_full},
           {"assumption", r.assumption},
           {"rows", r.rows}};
  if (!r.rows.empty()) j["summary"] = r.summary();
}

void from_json(const json& j, DiagnosticsReport& r) {
  r.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("epsilon").get_to(r.epsilon);
  j.at("kappa_r_full").get_to(r.kappa_r_full);
  j.at("assumption").get_to(r.assumption);
  j.at("rows").get_to(r.rows);
}

void to_json(json& j, const FinalAudit& r) {
  j = json{{"algorithm", std::string(to_string(r.algorithm))},
           {"m", r.m},
           {"n", r.n},
           {"epsilon", r.epsilon},
           {"assumption", r.assumption},
           {"summary", r.row}};
}

void from_json(const json& j, FinalAudit& r) {
  r.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
  j.at("m").get_to(r.m);
  j.at("n").get_to(r.n);
  j.at("epsilon").get_to(r.epsilon);
  j.at("assumption").get_to(r.assumption);
  j.at("summary").get_to(r.row);
}

}  // namespace gsqr
