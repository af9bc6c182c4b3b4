#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "localalg/tangent_cone.hpp"

namespace locmult {

// e(M/xM) >= t e(M) for x in m^t a non-zerodivisor on M = A/I, with equality
// exactly when the image of x in degree t of gr M drops the dimension.
struct DivisorCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool dim_dropped = false;
  bool consistent = false;
};

DivisorCheck mod_divisor_check(const Ideal& ideal, const Polynomial& x, unsigned t, const ConeConfig& config = {});

// User-supplied primes with lengths; not verified as a decomposition.
struct DecompositionClaim {
  std::vector<std::pair<Ideal, std::uint64_t>> components;
};

struct AdditivityCheck {
  std::int64_t e_total = 0;
  std::int64_t e_sum = 0;
  bool match = false;
};

// e(A/I) against the sum of m_i e(A/P_i) over the top-dimensional claimed primes.
AdditivityCheck additivity_check(const Ideal& ideal, const DecompositionClaim& claim, const ConeConfig& config = {});

}  // namespace locmult
