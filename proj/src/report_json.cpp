#include "sharp/report_json.hpp"

#include <cstdio>

namespace sharp {

using nlohmann::json;

json to_json(const DotProductSet& s) { return s.values; }

json to_json(const SharpnessReport& r) {
  json residuals = json::object();
  for (std::size_t k = 0; k < r.residuals.size(); ++k)
    residuals[std::to_string(k + 1)] = r.residuals[k];
  return {{"strength", r.design_strength},
          {"m", r.m},
          {"spectrum", to_json(r.spectrum)},
          {"antipodal", r.antipodal},
          {"sharp", r.is_sharp},
          {"strongly_sharp", r.is_strongly_sharp},
          {"residuals", residuals},
          {"settings", {{"cap", r.cap}, {"tol", kDesignTol}, {"clustering_tol", r.spectrum.clustering_tol}}}};
}

json to_json(const DominanceCertificate& c) {
  const auto& cons = c.consistency;
  return {{"config", c.config},
          {"potential", c.potential},
          {"nu", c.node_system.nu()},
          {"m", c.node_system.m()},
          {"nodes", c.node_system.nodes()},
          {"degree", c.degree()},
          {"design_strength", c.design_strength},
          {"newton_nodes", std::vector<double>(c.q.nodes().begin(), c.q.nodes().end())},
          {"newton_coeffs", std::vector<double>(c.q.coeffs().begin(), c.q.coeffs().end())},
          {"monomial_coeffs", std::vector<double>(c.monomial.begin(), c.monomial.end())},
          {"certified_max", c.certified_value},
          {"min_slack", c.min_slack},
          {"scale", c.scale},
          {"interpolation_residuals", {{"value", c.value_residual}, {"derivative", c.derivative_residual}}},
          {"consistency",
           {{"design_average", cons.design_average},
            {"direct_potential", cons.direct_potential},
            {"vs_design", cons.vs_design},
            {"vs_direct", cons.vs_direct},
            {"constancy", cons.constancy}}},
          {"settings",
           {{"value_residual_tol", kValueResidualTol},
            {"derivative_residual_tol", kDerivativeResidualTol},
            {"slack_tol", kSlackTol},
            {"consistency_tol", kConsistencyTol},
            {"dominance_grid", kDominanceGrid}}}};
}

json to_json(const SearchResult& r) {
  json argmax = json::array();
  for (const Vector& x : r.argmax) argmax.push_back(std::vector<double>(x.begin(), x.end()));
  return {{r.maximize ? "max" : "min", r.best_value},
          {"best_value", r.best_value},
          {r.maximize ? "argmax" : "argmin", argmax},
          {"starts", r.starts},
          {"converged_fraction", r.converged_fraction},
          {"strategy", to_string(r.strategy)}};
}

json to_json(const EnergyReport& r) {
  json j = {{"config", r.config}, {"n", r.n}, {"energy", r.energy}};
  j["certified_max"] = r.certified_max ? json(*r.certified_max) : json(nullptr);
  j["mean_value_check"] = r.mean_value_check ? json(*r.mean_value_check) : json(nullptr);
  return j;
}

json to_json(const ComparisonReport& r) {
  return {{"config", r.config},
          {"potential", r.potential},
          {"sense", r.sense},
          {"reference_value", r.reference_value},
          {"trials", r.trials},
          {"violations", r.violations},
          {"min_gap", r.min_gap},
          {"tol", r.tol},
          {"competitor_values", r.competitor_values}};
}

json to_json(const MonotonicityScan& s) {
  json orders = json::array();
  for (const auto& o : s.orders)
    orders.push_back({{"k", o.k}, {"min_signed", o.min_signed}, {"checked", o.checked}, {"ok", o.ok}});
  return {{"orders", orders}, {"completely_monotone", s.completely_monotone}};
}

std::string trial_log_csv(const ComparisonReport& r) {
  std::string out = "trial_id,seed,competitor_Q,gap\n";
  char buf[128];
  for (const TrialRecord& t : r.records) {
    std::snprintf(buf, sizeof buf, "%d,%llu,%.17g,%.17g\n", t.trial_id,
                  static_cast<unsigned long long>(t.seed), t.competitor_value, t.gap);
    out += buf;
  }
  return out;
}

} // namespace sharp
