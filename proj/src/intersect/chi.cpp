#include "intersect/chi.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

void require_proper_intersection(const Ideal& i, const Ideal& j, const GbConfig& config) {
  if (!same_ring(i.signature_ptr(), j.signature_ptr()))
    throw PreconditionError("signature-mismatch", "both ideals must live in the same base ring");
  Ideal sum = ideal_sum(i, j);
  if (!colength(sum, config))
    throw PreconditionError("improper-intersection", i.to_string() + " and " + j.to_string() +
                                                         " do not meet in finitely many points");
  const auto& sig = i.signature_ptr();
  for (std::size_t v = 0; v < sig->arity(); ++v)
    if (!radical_membership(Polynomial::variable(sig, v), sum, config))
      throw PreconditionError("support-not-origin", i.to_string() + " and " + j.to_string() +
                                                        " meet away from the origin");
}

ChiValue chi(const Ideal& i, const Ideal& j, const LocalConfig& config) {
  require_proper_intersection(i, j, config.gb);
  DoubledRing ring = make_doubled(i.signature_ptr());
  const std::size_t n = ring.base->arity();

  std::vector<Polynomial> shifted;
  std::vector<std::size_t> second;
  for (std::size_t v = 0; v < n; ++v) {
    shifted.push_back(Polynomial::variable(ring.doubled, *ring.first[v]) -
                      Polynomial::variable(ring.doubled, *ring.second[v]));
    second.push_back(*ring.second[v]);
  }
  std::vector<Polynomial> gens = map_ideal(i, ring.doubled, ring.first).generators();
  for (const auto& g : j.generators()) gens.push_back(substitute(g, ring.doubled, shifted));
  Ideal tensor(ring.doubled, std::move(gens));
  Ideal diagonal = Ideal::of_variables(ring.doubled, second);

  ChiValue out;
  out.certificate = multiplicity_wrt(tensor, diagonal, static_cast<unsigned>(n), config.samuel());
  out.value = out.certificate.value;
  return out;
}

unsigned tangent_tensor_dim(const Ideal& i, const Ideal& j, const LocalConfig& config) {
  TangentCone a = tangent_cone(i, config.cone());
  TangentCone b = tangent_cone(j, config.cone());
  return krull_dim(ideal_sum(a.ideal, b.ideal), config.gb);
}

std::int64_t excess(const Ideal& i, const Ideal& j, const LocalConfig& config) {
  TangentCone a = tangent_cone(i, config.cone());
  TangentCone b = tangent_cone(j, config.cone());
  if (a.dimension + b.dimension != i.signature().arity())
    throw PreconditionError("not-complementary", "dimensions " + std::to_string(a.dimension) + " + " +
                                                     std::to_string(b.dimension) + " do not add up to " +
                                                     std::to_string(i.signature().arity()));
  return chi(i, j, config).value - a.series.multiplicity() * b.series.multiplicity();
}

}  // namespace locmult
