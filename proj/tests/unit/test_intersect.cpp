#include <doctest.h>

#include <algorithm>

#include "cli/parser.hpp"
#include "intersect/chi.hpp"
#include "intersect/comparisons.hpp"
#include "intersect/report.hpp"
#include "intersect/rings.hpp"
#include "polyalg/errors.hpp"

using namespace locmult;

namespace {

SignaturePtr ring(std::vector<std::string> vars, std::optional<std::string> u = {}) {
  return RingSignature::make(Field::rationals(), std::move(vars), std::move(u));
}

Polynomial P(const SignaturePtr& r, const char* text) { return parse_polynomial(r, text); }

Ideal I(const SignaturePtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(P(r, s));
  return Ideal(r, std::move(g));
}

const SignaturePtr& xyz() {
  static SignaturePtr r = ring({"x", "y", "z"});
  return r;
}
const SignaturePtr& xy() {
  static SignaturePtr r = ring({"x", "y"});
  return r;
}
const SignaturePtr& tx() {
  static SignaturePtr r = ring({"t", "x"}, "t");
  return r;
}

Ideal plane_and_parabola() { return I(xyz(), {"x*y - x^3", "x*z"}); }
Ideal axis() { return I(xyz(), {"y", "z"}); }

bool has_diagnostic(const ChiReport& r, const std::string& prefix) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                     [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("doubled rings") {
  DoubledRing d = make_doubled(tx());
  CHECK(d.doubled->variables() == std::vector<std::string>{"t_1", "x_1", "t_2", "x_2"});
  CHECK(d.collapsed->variables() == std::vector<std::string>{"t", "x_1", "x_2"});
  Ideal diag = diagonal_ideal(d);
  CHECK(diag.generators().size() == 2);
  for (const auto& g : diag.generators()) CHECK(*total_degree(g) == 1);
  CHECK_FALSE(make_doubled(xy()).collapsed);
}

TEST_CASE("tensor over the field") {
  Ideal t = tensor_over_field(I(xy(), {"x"}), I(xy(), {"y"}));
  auto d = t.signature_ptr();
  CHECK(d->arity() == 4);
  CHECK(ideal_equal(t, I(d, {"x_1", "y_2"})));
  Ideal e = tensor_over_field(plane_and_parabola(), axis());
  CHECK(ideal_equal(e, I(e.signature_ptr(), {"x_1*y_1 - x_1^3", "x_1*z_1", "y_2", "z_2"})));
  CHECK(tensor_over_field(Ideal::zero(xy()), Ideal::zero(xy())).is_zero());
  CHECK_THROWS_AS(tensor_over_field(I(xy(), {"x"}), I(xyz(), {"x"})), PreconditionError);
}

TEST_CASE("tensor over the uniformizer") {
  Ideal t = tensor_over_dvr(I(tx(), {"t - x^2"}), I(tx(), {"t - x^2"}));
  auto c = t.signature_ptr();
  CHECK(ideal_equal(t, I(c, {"t - x_1^2", "t - x_2^2"})));
  CHECK(multiplicity(t).value == 2);
  CHECK(ideal_equal(tensor_over_dvr(I(tx(), {"t"}), I(tx(), {"t"})), I(c, {"t"})));
  Ideal lines = tensor_over_dvr(I(tx(), {"t - x"}), I(tx(), {"t - x"}));
  CHECK(multiplicity(lines).value == 1);
  CHECK_THROWS_AS(tensor_over_dvr(I(xy(), {"x"}), I(xy(), {"y"})), PreconditionError);
}

TEST_CASE("flatness over the uniformizer") {
  CHECK(flatness_over_uniformizer(I(tx(), {"t - x^2"})));
  CHECK_FALSE(flatness_over_uniformizer(I(tx(), {"t"})));
  CHECK(flatness_over_uniformizer(I(tx(), {"x"})));
}

TEST_CASE("chi") {
  ChiValue e = chi(plane_and_parabola(), axis());
  CHECK(e.value == 1);
  CHECK(e.certificate.method == MultiplicityCertificate::Method::finite_difference);
  CHECK(chi(I(xy(), {"x"}), I(xy(), {"y"})).value == 1);
  CHECK(chi(I(xyz(), {"y", "z"}), I(xyz(), {"x", "z"})).value == 0);
  CHECK(chi(I(xy(), {"y"}), I(xy(), {"y - x^2"})).value == 2);
  CHECK(chi(I(xy(), {"y^2 - x^3"}), I(xy(), {"y"})).value == 3);
}

TEST_CASE("chi preconditions") {
  CHECK_THROWS_AS(chi(I(xy(), {"x"}), I(xy(), {"x"})), PreconditionError);
  CHECK_THROWS_AS(chi(I(xy(), {"x*(x - 1)"}), I(xy(), {"y"})), PreconditionError);
  try {
    chi(I(xy(), {"y"}), I(xy(), {"y - 1"}));
  } catch (const PreconditionError& err) {
    CHECK(err.tag() == "improper-intersection");
  }
}

TEST_CASE("tangent tensor dimension and excess") {
  CHECK(tangent_tensor_dim(plane_and_parabola(), axis()) == 1u);
  CHECK(tangent_tensor_dim(I(xy(), {"x"}), I(xy(), {"y"})) == 0u);
  CHECK(tangent_tensor_dim(I(xy(), {"y"}), I(xy(), {"y - x^2"})) == 1u);
  CHECK(excess(I(xy(), {"y"}), I(xy(), {"y - x^2"})) == 1);
  CHECK(excess(I(xy(), {"x"}), I(xy(), {"y"})) == 0);
  CHECK(excess(plane_and_parabola(), axis()) == 0);
  CHECK_THROWS_AS(excess(I(xyz(), {"y", "z"}), I(xyz(), {"x", "z"})), PreconditionError);
}

TEST_CASE("samuel check") {
  auto rx = ring({"x"});
  SamuelCheck a = samuel_check(I(rx, {"x^2"}), I(rx, {"x^3"}));
  CHECK(a.ideal_match);
  CHECK(a.convolution_match);
  CHECK(std::vector<std::int64_t>(a.convolution.begin(), a.convolution.begin() + 5) ==
        std::vector<std::int64_t>{1, 2, 2, 1, 0});
  std::int64_t total = 0;
  for (auto v : a.tensor_hf) total += v;
  CHECK(total == 6);
  SamuelCheck b = samuel_check(Ideal::zero(xy()), Ideal::zero(xy()));
  CHECK(b.ideal_match);
  CHECK(b.convolution_match);
  auto txy = ring({"t", "x", "y"});
  SamuelCheck c = samuel_check(I(txy, {"t - x^2"}), I(txy, {"t - y^2"}));
  CHECK(c.ideal_match);
  CHECK(c.convolution_match);
}

TEST_CASE("psi defect") {
  PsiDefect a = psi_defect(I(tx(), {"t - x^2"}), I(tx(), {"t - x^2"}));
  CHECK(a.containment);
  CHECK(a.dim_src == 2);
  CHECK(a.dim_tgt == 1);
  CHECK_FALSE(a.homeomorphic_proxy);
  PsiDefect b = psi_defect(I(tx(), {"t - x"}), I(tx(), {"t - x"}));
  CHECK(b.containment);
  CHECK(b.dim_src == 1);
  CHECK(b.dim_tgt == 1);
  CHECK(b.e_src == b.e_tgt);
  PsiDefect c = psi_defect(I(tx(), {"x"}), I(tx(), {"t - x"}));
  CHECK(c.containment);
  CHECK(c.homeomorphic_proxy);
  CHECK_THROWS_AS(psi_defect(I(tx(), {"t"}), I(tx(), {"x"})), PreconditionError);
}

TEST_CASE("dimension cut") {
  DimcutCheck a = dimcut_check(I(tx(), {"t - x^2"}), I(tx(), {"t - x^2"}));
  CHECK(a.lhs_dim == 2);
  CHECK(a.rhs_dim == 1);
  CHECK(a.e_tensor == 2);
  CHECK(a.e_product == 1);
  CHECK(a.consistent);
  DimcutCheck b = dimcut_check(I(tx(), {"t - x"}), I(tx(), {"t - x"}));
  CHECK(b.lhs_dim == 1);
  CHECK(b.rhs_dim == 1);
  CHECK(b.consistent);
  auto txy = ring({"t", "x", "y"}, "t");
  DimcutCheck c = dimcut_check(I(txy, {"x"}), I(txy, {"y"}));
  CHECK(c.lhs_dim == c.rhs_dim);
  CHECK(c.e_tensor == 1);
  CHECK(c.consistent);
}

TEST_CASE("report: transverse parabola and line") {
  ChiReport r = serre_report(I(tx(), {"t - x^2"}), I(tx(), {"x"}), true);
  CHECK(r.chi == 1);
  CHECK(r.excess == 0);
  CHECK(r.tangent_dim == 0);
  CHECK(r.tensor_mode == "dvr");
  CHECK(r.verdicts.theorem_A == Verdict::holds);
  CHECK(r.verdicts.theorem_D == Verdict::holds);
  CHECK(r.verdicts.conjecture_I == Verdict::holds);
  REQUIRE(r.conditions_E);
  CHECK(r.conditions_E->iii);
  CHECK(r.conditions_E->iv);
  CHECK(r.excess == r.chi - r.e_M.value * r.e_N.value);
}

TEST_CASE("report: opposite parabolas") {
  ChiReport r = serre_report(I(tx(), {"t - x^2"}), I(tx(), {"t + x^2"}), true);
  CHECK(r.chi == 2);
  CHECK(r.excess == 1);
  CHECK(r.tangent_dim == 1);
  CHECK(*r.e_M_mod_t == 2);
  CHECK(*r.e_N_mod_t == 2);
  CHECK(r.verdicts.theorem_D == Verdict::holds);
  CHECK(r.verdicts.conjecture_I == Verdict::holds);
  CHECK_FALSE(has_diagnostic(r, "counterexample-candidate"));
}

TEST_CASE("report: missing equidimensionality is flagged") {
  ChiReport r = serre_report(plane_and_parabola(), axis(), false);
  CHECK(r.chi == 1);
  CHECK(r.excess == 0);
  CHECK(r.tangent_dim == 1);
  CHECK(r.flags.complementary);
  CHECK_FALSE(r.flags.equidim_asserted);
  CHECK(r.verdicts.conjecture_I == Verdict::caveat);
  CHECK_FALSE(has_diagnostic(r, "counterexample-candidate"));
  CHECK(has_diagnostic(r, "caveat: equidimensionality"));
}

TEST_CASE("report: asserting equidimensionality on a non-equidimensional pair") {
  ChiReport r = serre_report(plane_and_parabola(), axis(), true);
  CHECK(r.verdicts.conjecture_I == Verdict::fails);
  CHECK(has_diagnostic(r, "counterexample-candidate"));
}

TEST_CASE("chi is symmetric") {
  CHECK(chi(axis(), plane_and_parabola()).value == 1);
  CHECK(chi(I(xy(), {"y"}), I(xy(), {"y^2 - x^3"})).value == 3);
}
