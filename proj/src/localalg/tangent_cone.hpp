#pragma once

#include <cstdint>
#include <vector>

#include "groebner/ideal.hpp"
#include "localalg/hilbert_samuel.hpp"

namespace locmult {

struct ConeConfig {
  GbConfig gb;
  // The Hilbert function of the cone is compared with first differences of
  // the Hilbert-Samuel function in degrees 0..certificate_degree.
  unsigned certificate_degree = 12;
};

// gr(A/I) = k[x]/in(I), with in(I) given by a reduced grevlex basis.
struct TangentCone {
  Ideal ideal;
  unsigned dimension = 0;
  HilbertSeries series;
  // hs(I, m, n) for n = 0..certificate_degree + 1, as used by the certificate.
  std::vector<std::uint64_t> samuel_values;
};

// Throws PreconditionError("unit-ideal") when some generator is a unit at
// the origin.  The zero ideal is accepted (its cone is the zero ideal).
TangentCone tangent_cone(const Ideal& ideal, const ConeConfig& config = {});

unsigned local_dim(const Ideal& ideal, const ConeConfig& config = {});

// e(A/I) with respect to the maximal ideal, read off the cone's Hilbert series.
MultiplicityCertificate multiplicity(const Ideal& ideal, const ConeConfig& config = {});
MultiplicityCertificate multiplicity_of_cone(const TangentCone& cone);

// Checks that the Hilbert function of k[x]/cone.ideal in degrees
// 0..degree equals the first differences of hs(I, m, .).
bool cone_certificate_holds(const Ideal& ideal, const TangentCone& cone, unsigned degree,
                            const GbConfig& config = {});

}  // namespace locmult
