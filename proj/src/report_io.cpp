#include "f2/report_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace f2 {

std::string mask_hex(std::uint32_t mask) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", mask);
  return buf;
}

std::uint32_t mask_from_hex(const std::string& text) {
  if (text.rfind("0x", 0) != 0) throw std::invalid_argument("bad mask literal: " + text);
  return static_cast<std::uint32_t>(std::stoul(text.substr(2), nullptr, 16));
}

std::string mpq_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class mpq_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  q.canonicalize();
  return q;
}

json subspace_to_json(const Subspace& v) {
  json j;
  j["n"] = v.ambient_dim();
  j["dim"] = v.dim();
  json basis = json::array();
  for (GroupElement b : v.basis()) basis.push_back(mask_hex(b));
  j["basis"] = basis;
  json ann = json::array();
  for (Character g : v.annihilator()) ann.push_back(mask_hex(g));
  j["annihilator"] = ann;
  return j;
}

Subspace subspace_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<GroupElement> basis;
  for (const auto& b : j.at("basis")) basis.push_back(mask_from_hex(b.get<std::string>()));
  return Subspace::span_of(n, basis);
}

json report_to_json(const FinderReport& report) {
  json j;
  j["type"] = "finder_report";
  j["n"] = report.n;
  j["alpha"] = report.alpha.to_string();
  j["stopping_rule"] = report.stopping.to_string();
  j["theorem_bound"] = report.theorem_bound;
  j["achieved_codim"] = report.achieved_codim;
  j["verified"] = report.verified;
  json steps = json::array();
  for (const IterationStep& s : report.steps) {
    json sj;
    sj["step_index"] = s.step_index;
    sj["codim_before"] = s.codim_before;
    sj["gamma_local"] = mask_hex(s.gamma_local);
    sj["gamma_lift"] = mask_hex(s.gamma_lift);
    sj["density_s_before"] = s.density_s_before.to_string();
    sj["density_s_after"] = s.density_s_after.to_string();
    sj["contraction_bound"] = mpq_to_string(s.contraction_bound);
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["final_subspace"] = subspace_to_json(report.final_subspace);
  return j;
}

FinderReport report_from_json(const json& j) {
  FinderReport r;
  r.n = j.at("n").get<int>();
  r.alpha = Dyadic::parse(j.at("alpha").get<std::string>());
  r.stopping = Stopping::parse(j.at("stopping_rule").get<std::string>());
  r.theorem_bound = j.at("theorem_bound").get<int>();
  r.achieved_codim = j.at("achieved_codim").get<int>();
  r.verified = j.at("verified").get<bool>();
  for (const auto& sj : j.at("steps")) {
    IterationStep s;
    s.step_index = sj.at("step_index").get<int>();
    s.codim_before = sj.at("codim_before").get<int>();
    s.gamma_local = mask_from_hex(sj.at("gamma_local").get<std::string>());
    s.gamma_lift = mask_from_hex(sj.at("gamma_lift").get<std::string>());
    s.density_s_before = Dyadic::parse(sj.at("density_s_before").get<std::string>());
    s.density_s_after = Dyadic::parse(sj.at("density_s_after").get<std::string>());
    s.contraction_bound = mpq_from_string(sj.at("contraction_bound").get<std::string>());
    r.steps.push_back(s);
  }
  r.final_subspace = subspace_from_json(j.at("final_subspace"));
  return r;
}

}  // namespace f2
