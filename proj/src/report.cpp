#include "sspec/report.hpp"

namespace sspec {

json to_json(const CharPolyFingerprint& f) {
  json primes = json::array(), coeffs = json::array();
  for (const auto& [p, poly] : f.evaluations) {
    primes.push_back(p);
    coeffs.push_back(poly);
  }
  return {{"degree", f.degree}, {"primes", primes}, {"coeffs", coeffs}};
}

json to_json(const SpectrumSummary& s) {
  json eigs = json::array();
  for (const auto& e : s.integer_eigs) eigs.push_back({{"value", e.value}, {"mult", e.multiplicity}});
  json r = to_json(s.residual);
  r["degree"] = s.residual_degree;
  return {{"size", s.size}, {"eigs", eigs}, {"residual", r}};
}

json to_json(const PredictedSpectrum& p) {
  json eigs = json::array();
  for (const auto& [v, m] : p.entries) eigs.push_back({{"value", v}, {"mult", m}});
  return {{"size", p.size()}, {"eigs", eigs}, {"source", p.source}};
}

json to_json(const OrderedCycle& c) { return c.verts; }

json to_json(const H1Report& r) {
  json v = json::object();
  for (const auto& [k, verdict] : r.checker_verdicts) v[k] = to_string(verdict);
  return {{"dim_h1", r.dim_h1},   {"rank_d0", r.rank_d0},         {"rank_d1", r.rank_d1},
          {"n_edges", r.n_edges}, {"dual_dim", r.dual_dim},       {"primes_used", r.primes_used},
          {"checker_verdicts", v}};
}

json to_json(const CheckResult& r) {
  json j = {{"verdict", to_string(r.verdict)}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const ConferenceReport& r) {
  json j = {{"is_srg", r.is_srg},
            {"conference_params", r.conference_params},
            {"v_above_9", r.v_above_9},
            {"condition_a", to_string(r.condition_a)},
            {"condition_b", to_string(r.condition_b)}};
  if (r.a_witness) j["a_witness"] = {r.a_witness->first, r.a_witness->second};
  if (r.b_witness) j["b_witness"] = to_json(*r.b_witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string format_charpoly(const SpectrumSummary& s) {
  std::string out;
  // descending eigenvalue order, matching the array form
  for (auto it = s.integer_eigs.rbegin(); it != s.integer_eigs.rend(); ++it) {
    if (!out.empty()) out += " ";
    std::string base = it->value == 0 ? "x"
                       : it->value > 0 ? "(x-" + std::to_string(it->value) + ")"
                                       : "(x+" + std::to_string(-it->value) + ")";
    out += base;
    if (it->multiplicity != 1) out += "^" + std::to_string(it->multiplicity);
  }
  if (s.residual_degree > 0) out += (out.empty() ? "" : " ") + std::string("R(x) [deg ") + std::to_string(s.residual_degree) + "]";
  return out.empty() ? "1" : out;
}

}  // namespace sspec
