#include "localalg/checks.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

DivisorCheck mod_divisor_check(const Ideal& ideal, const Polynomial& x, unsigned t, const ConeConfig& config) {
  if (x.is_zero()) throw PreconditionError("zerodivisor", "the zero element is a zerodivisor");
  const unsigned ord = order_of(x);
  if (ord < t)
    throw PreconditionError("order-too-low", x.to_string() + " has order " + std::to_string(ord) + " < " +
                                                 std::to_string(t));
  if (!ideal_equal(ideal_quotient_by_poly(ideal, x, config.gb), ideal, config.gb))
    throw PreconditionError("zerodivisor", x.to_string() + " is a zerodivisor modulo " + ideal.to_string());

  TangentCone cone = tangent_cone(ideal, config);
  TangentCone cut = tangent_cone(with_generator(ideal, x), config);
  DivisorCheck out;
  out.lhs = cut.series.multiplicity();
  out.rhs = static_cast<std::int64_t>(t) * cone.series.multiplicity();
  // The image of x in degree t of gr M vanishes when ord(x) > t.
  Ideal with_image = ord == t ? with_generator(cone.ideal, initial_form(x)) : cone.ideal;
  out.dim_dropped = krull_dim(with_image, config.gb) < cone.dimension;
  out.consistent = out.lhs >= out.rhs && ((out.lhs == out.rhs) == out.dim_dropped);
  return out;
}

AdditivityCheck additivity_check(const Ideal& ideal, const DecompositionClaim& claim, const ConeConfig& config) {
  TangentCone cone = tangent_cone(ideal, config);
  AdditivityCheck out;
  out.e_total = cone.series.multiplicity();
  for (const auto& [prime, length] : claim.components) {
    if (!same_ring(prime.signature_ptr(), ideal.signature_ptr()))
      throw PreconditionError("signature-mismatch", "claimed prime lives in a different ring");
    if (prime.basis(MonomialOrder::grevlex(), config.gb)->is_unit_ideal() || !prime.inside_maximal())
      throw PreconditionError("unit-ideal", "claimed prime " + prime.to_string() + " is not proper at the origin");
    TangentCone pc = tangent_cone(prime, config);
    if (pc.dimension == cone.dimension) out.e_sum += static_cast<std::int64_t>(length) * pc.series.multiplicity();
  }
  out.match = out.e_total == out.e_sum;
  return out;
}

}  // namespace locmult
