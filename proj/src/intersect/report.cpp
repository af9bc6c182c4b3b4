#include "intersect/report.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not_applicable";
    case Verdict::caveat:
      return "caveat";
  }
  return "?";
}

namespace {

Verdict from_bool(bool ok) { return ok ? Verdict::holds : Verdict::fails; }

}  // namespace

ChiReport serre_report(const Ideal& i, const Ideal& j, bool equidim_asserted, const LocalConfig& config) {
  require_proper_intersection(i, j, config.gb);
  const auto& sig = i.signature_ptr();
  DoubledRing ring = make_doubled(sig);
  TangentCone cone_i = tangent_cone(i, config.cone());
  TangentCone cone_j = tangent_cone(j, config.cone());

  ChiReport r;
  r.flags.finite_colength = true;
  r.flags.origin_supported = true;
  r.flags.equidim_asserted = equidim_asserted;
  ChiValue c = chi(i, j, config);
  r.chi = c.value;
  r.chi_certificate = c.certificate;
  r.e_M = multiplicity_of_cone(cone_i);
  r.e_N = multiplicity_of_cone(cone_j);
  r.dim_M = cone_i.dimension;
  r.dim_N = cone_j.dimension;
  r.dim_A = static_cast<unsigned>(sig->arity());
  r.flags.complementary = r.dim_M + r.dim_N == r.dim_A;
  r.excess = r.chi - r.e_M.value * r.e_N.value;
  r.tangent_dim = krull_dim(ideal_sum(cone_i.ideal, cone_j.ideal), config.gb);

  const auto u = sig->uniformizer();
  if (u) {
    r.tensor_mode = "dvr";
    r.e_tensor = multiplicity(tensor_over_dvr(i, j, ring), config.cone());
    Polynomial t = Polynomial::variable(sig, *u);
    r.e_M_mod_t = multiplicity(with_generator(i, t), config.cone()).value;
    r.e_N_mod_t = multiplicity(with_generator(j, t), config.cone()).value;
    r.flags.M_flat_over_t = flatness_over_uniformizer(i, config.gb);
    r.flags.N_flat_over_t = flatness_over_uniformizer(j, config.gb);
  } else {
    r.tensor_mode = "field";
    r.e_tensor = multiplicity(tensor_over_field(i, j, ring), config.cone());
  }

  ReportVerdicts& v = r.verdicts;
  const bool comp = r.flags.complementary;
  const bool equality = r.excess == 0;
  const bool transverse = r.tangent_dim == 0;

  if (comp) {
    v.theorem_A = from_bool(r.excess >= 0);
    v.tennison = from_bool(!transverse || equality);
    if (equidim_asserted) {
      bool consistent = r.excess >= 0 && (equality == transverse);
      v.conjecture_I = from_bool(consistent);
      v.theorem_B = v.conjecture_I;
      if (!consistent)
        r.diagnostics.push_back("counterexample-candidate: excess " + std::to_string(r.excess) +
                                " with tangent_dim " + std::to_string(r.tangent_dim));
    } else {
      v.conjecture_I = Verdict::caveat;
      v.theorem_B = Verdict::caveat;
      r.diagnostics.push_back("caveat: equidimensionality not asserted; Conjecture I check skipped");
    }
  } else {
    r.notes.push_back("dimensions " + std::to_string(r.dim_M) + " + " + std::to_string(r.dim_N) +
                      " are not complementary in dimension " + std::to_string(r.dim_A));
  }

  if (u) {
    Polynomial t = Polynomial::variable(sig, *u);
    const bool flat = *r.flags.M_flat_over_t && *r.flags.N_flat_over_t;
    const bool m_eq = r.e_M.value == *r.e_M_mod_t;
    const bool n_eq = r.e_N.value == *r.e_N_mod_t;

    if (comp && (radical_membership(t, i, config.gb) || radical_membership(t, j, config.gb)))
      v.theorem_C = v.conjecture_I;

    if (comp && flat) {
      v.theorem_D = from_bool(!equality || m_eq || n_eq);

      ConditionsE e;
      e.hypothesis = m_eq || n_eq;
      e.role = m_eq ? "M" : "N";
      const bool other_eq = m_eq ? n_eq : m_eq;
      const unsigned dim_first = m_eq ? r.dim_M : r.dim_N;
      e.ii = other_eq;
      e.iii = dim_first + 1 == r.dim_A;
      e.iv = dim_first == 1;
      Ideal cut = with_generator(ideal_sum(cone_i.ideal, cone_j.ideal), t);
      e.v = krull_dim(cut, config.gb) == 0;
      if (e.hypothesis && (e.ii || e.iii || e.iv || e.v)) v.theorem_E = v.conjecture_I;
      r.conditions_E = e;
    }
  }

  if (sig->field().is_rationals())
    r.notes.push_back("computed over Q; colengths, dimensions and multiplicities are unchanged over an algebraic closure");
  return r;
}

}  // namespace locmult
