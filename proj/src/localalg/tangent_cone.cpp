#include "localalg/tangent_cone.hpp"

#include <algorithm>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

const char* const kHomogenizer = "@h";

// Homogenize with a trailing variable h, compute a basis in an order that
// prefers high powers of h (low x-degree), dehomogenize and take initial
// forms.  Dehomogenized, the basis is a standard basis for a local degree
// order, so the initial forms generate in(I).
std::vector<Polynomial> initial_generators(const Ideal& ideal, const GbConfig& config) {
  const auto& sig = ideal.signature_ptr();
  const std::size_t n = sig->arity();
  auto ext = extend_signature(sig, {kHomogenizer});
  auto embed = map_by_name(*sig, *ext);

  std::vector<Polynomial> homogenized;
  for (const auto& g : ideal.generators()) {
    unsigned top = *total_degree(g);
    Polynomial lifted = rename_embed(g, ext, embed);
    std::vector<Term> terms;
    for (const auto& t : lifted.terms()) {
      Monomial m = t.mono;
      m.set(n, top - t.mono.degree());
      terms.push_back({m, t.coeff});
    }
    homogenized.push_back(Polynomial::from_terms(ext, std::move(terms)));
  }

  std::vector<long> all(n + 1, 1), last(n + 1, 0);
  last[n] = 1;
  auto order = MonomialOrder::weighted({all, last});
  GroebnerBasis gb = buchberger(ext, homogenized, order, config);

  VariableMap drop(n + 1);
  for (std::size_t i = 0; i < n; ++i) drop[i] = i;
  std::vector<Polynomial> forms;
  for (const auto& e : gb.elements()) {
    std::vector<Term> terms;
    for (const auto& t : e.terms()) {
      Monomial m = t.mono;
      m.set(n, 0);
      terms.push_back({m, t.coeff});
    }
    Polynomial d = rename_embed(Polynomial::from_terms(ext, std::move(terms)), sig, drop);
    if (!d.is_zero()) forms.push_back(initial_form(d));
  }
  return forms;
}

}  // namespace

TangentCone tangent_cone(const Ideal& ideal, const ConeConfig& config) {
  if (!ideal.inside_maximal())
    throw PreconditionError("unit-ideal", "tangent cone of " + ideal.to_string() + ": a generator is a unit at the origin");
  const auto& sig = ideal.signature_ptr();
  Ideal cone(sig, ideal.is_zero() ? std::vector<Polynomial>{} : initial_generators(ideal, config.gb));
  auto gb = cone.basis(MonomialOrder::grevlex(), config.gb);
  Ideal reduced(sig, gb->elements());
  HilbertSeries series = monomial_hilbert_series(gb->leads(), sig->arity());

  TangentCone out{reduced, series.pole_order, series, {}};
  out.samuel_values = hs_maximal(ideal, config.certificate_degree + 1, config.gb);
  for (unsigned n = 0; n <= config.certificate_degree; ++n) {
    auto expected = static_cast<std::int64_t>(out.samuel_values[n + 1] - out.samuel_values[n]);
    if (series.coefficient(n) != expected)
      throw CertificateError("tangent cone of " + ideal.to_string() + " fails the Hilbert function check in degree " +
                             std::to_string(n) + ": cone gives " + std::to_string(series.coefficient(n)) +
                             ", Hilbert-Samuel difference gives " + std::to_string(expected));
  }
  return out;
}

bool cone_certificate_holds(const Ideal& ideal, const TangentCone& cone, unsigned degree, const GbConfig& config) {
  auto values = hs_maximal(ideal, degree + 1, config);
  for (unsigned n = 0; n <= degree; ++n)
    if (cone.series.coefficient(n) != static_cast<std::int64_t>(values[n + 1] - values[n])) return false;
  return true;
}

unsigned local_dim(const Ideal& ideal, const ConeConfig& config) { return tangent_cone(ideal, config).dimension; }

MultiplicityCertificate multiplicity_of_cone(const TangentCone& cone) {
  MultiplicityCertificate cert;
  cert.method = MultiplicityCertificate::Method::exact_hilbert_series;
  cert.value = cone.series.multiplicity();
  cert.dimension = cone.dimension;
  cert.series = cone.series;
  return cert;
}

MultiplicityCertificate multiplicity(const Ideal& ideal, const ConeConfig& config) {
  return multiplicity_of_cone(tangent_cone(ideal, config));
}

}  // namespace locmult
