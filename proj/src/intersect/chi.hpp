#pragma once

#include <cstdint>

#include "intersect/rings.hpp"
#include "localalg/tangent_cone.hpp"

namespace locmult {

struct LocalConfig {
  GbConfig gb;
  unsigned max_n = 24;
  unsigned window = 3;
  unsigned certificate_degree = 12;

  SamuelConfig samuel() const { return {gb, max_n, window}; }
  ConeConfig cone() const { return {gb, certificate_degree}; }
};

// Throws PreconditionError unless I + J has finite colength and vanishes
// only at the origin.
void require_proper_intersection(const Ideal& i, const Ideal& j, const GbConfig& config = {});

// chi(A/I, A/J) = e_d(A/I (x)_k A/J) with d the diagonal and the difference
// order dim A.  The certificate is taken after the linear change of
// coordinates x_2 -> x_1 - x_2 that turns the diagonal into (x_2).
struct ChiValue {
  std::int64_t value = 0;
  MultiplicityCertificate certificate;
};

ChiValue chi(const Ideal& i, const Ideal& j, const LocalConfig& config = {});

// Krull dimension of k[x]/(in(I) + in(J)).
unsigned tangent_tensor_dim(const Ideal& i, const Ideal& j, const LocalConfig& config = {});

// chi - e(A/I) e(A/J); requires complementary dimensions.
std::int64_t excess(const Ideal& i, const Ideal& j, const LocalConfig& config = {});

}  // namespace locmult
