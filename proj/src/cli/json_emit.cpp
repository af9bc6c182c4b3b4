#include "cli/json_emit.hpp"

namespace locmult {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json string_list(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

}  // namespace

Json series_json(const HilbertSeries& s) {
  Json j;
  j["numerator"] = s.numerator;
  j["pole_order"] = s.pole_order;
  j["text"] = s.to_string();
  return j;
}

Json certificate_json(const MultiplicityCertificate& c) {
  Json j;
  j["value"] = c.value;
  j["dimension"] = c.dimension;
  j["method"] = method_name(c.method);
  if (c.method == MultiplicityCertificate::Method::exact_hilbert_series) {
    if (c.series) j["series"] = series_json(*c.series);
  } else {
    j["samples"] = c.samples;
    j["window_start"] = c.window_start;
    j["window_width"] = c.window_width;
    j["differences"] = c.differences;
  }
  return j;
}

Json basis_json(const GroebnerBasis& gb) {
  Json j;
  j["ring"] = gb.signature_ptr()->to_string();
  j["order"] = gb.order().key();
  j["elements"] = string_list(gb.elements());
  return j;
}

Json cone_json(const TangentCone& cone) {
  Json j;
  j["ideal"] = string_list(cone.ideal.generators());
  j["dimension"] = cone.dimension;
  j["series"] = series_json(cone.series);
  j["samuel_values"] = cone.samuel_values;
  return j;
}

Json report_json(const ChiReport& r) {
  Json j;
  j["chi"] = r.chi;
  j["e_M"] = certificate_json(r.e_M);
  j["e_N"] = certificate_json(r.e_N);
  j["e_tensor"] = certificate_json(r.e_tensor);
  j["tensor_mode"] = r.tensor_mode;
  j["dim_M"] = r.dim_M;
  j["dim_N"] = r.dim_N;
  j["dim_A"] = r.dim_A;
  j["excess"] = r.excess;
  j["tangent_dim"] = r.tangent_dim;
  j["e_M_mod_t"] = r.e_M_mod_t ? Json(*r.e_M_mod_t) : Json(nullptr);
  j["e_N_mod_t"] = r.e_N_mod_t ? Json(*r.e_N_mod_t) : Json(nullptr);
  Json f;
  f["complementary"] = r.flags.complementary;
  f["finite_colength"] = r.flags.finite_colength;
  f["origin_supported"] = r.flags.origin_supported;
  f["M_flat_over_t"] = optional_bool(r.flags.M_flat_over_t);
  f["N_flat_over_t"] = optional_bool(r.flags.N_flat_over_t);
  f["equidim_asserted"] = r.flags.equidim_asserted;
  j["flags"] = f;
  Json v;
  v["theorem_A"] = verdict_name(r.verdicts.theorem_A);
  v["theorem_B"] = verdict_name(r.verdicts.theorem_B);
  v["theorem_C"] = verdict_name(r.verdicts.theorem_C);
  v["theorem_D"] = verdict_name(r.verdicts.theorem_D);
  v["theorem_E"] = verdict_name(r.verdicts.theorem_E);
  v["conjecture_I"] = verdict_name(r.verdicts.conjecture_I);
  v["tennison"] = verdict_name(r.verdicts.tennison);
  j["verdicts"] = v;
  if (r.conditions_E) {
    Json e;
    e["hypothesis"] = r.conditions_E->hypothesis;
    e["role"] = r.conditions_E->role;
    e["ii"] = r.conditions_E->ii;
    e["iii"] = r.conditions_E->iii;
    e["iv"] = r.conditions_E->iv;
    e["v"] = r.conditions_E->v;
    j["conditions_E"] = e;
  } else {
    j["conditions_E"] = nullptr;
  }
  j["chi_certificate"] = certificate_json(r.chi_certificate);
  j["diagnostics"] = r.diagnostics;
  j["notes"] = r.notes;
  return j;
}

Json divisor_json(const DivisorCheck& c) {
  return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"dim_dropped", c.dim_dropped}, {"consistent", c.consistent}};
}

Json additivity_json(const AdditivityCheck& c) {
  return Json{{"e_total", c.e_total}, {"e_sum", c.e_sum}, {"match", c.match}};
}

Json samuel_json(const SamuelCheck& c) {
  return Json{{"ideal_match", c.ideal_match},
              {"convolution_match", c.convolution_match},
              {"tensor_hf", c.tensor_hf},
              {"convolution", c.convolution}};
}

Json psi_json(const PsiDefect& c) {
  return Json{{"containment", c.containment}, {"dim_src", c.dim_src}, {"dim_tgt", c.dim_tgt},
              {"e_src", c.e_src},             {"e_tgt", c.e_tgt},     {"homeomorphic_proxy", c.homeomorphic_proxy}};
}

Json dimcut_json(const DimcutCheck& c) {
  return Json{{"lhs_dim", c.lhs_dim},
              {"rhs_dim", c.rhs_dim},
              {"e_tensor", c.e_tensor},
              {"e_product", c.e_product},
              {"consistent", c.consistent}};
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace locmult
