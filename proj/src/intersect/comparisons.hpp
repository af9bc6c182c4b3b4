#pragma once

#include <cstdint>
#include <vector>

#include "intersect/chi.hpp"

namespace locmult {

// gr(A/I) (x)_k gr(A/J) against gr of the completed tensor product over k.
struct SamuelCheck {
  bool ideal_match = false;
  bool convolution_match = false;
  std::vector<std::int64_t> tensor_hf;
  std::vector<std::int64_t> convolution;
};

SamuelCheck samuel_check(const Ideal& i, const Ideal& j, const LocalConfig& config = {}, unsigned degree = 15);

// The surjection (gr M (x)_k gr N)/(t_1 - t_2) -> gr(M (x)_R N) over R = k[[t]].
struct PsiDefect {
  bool containment = false;
  unsigned dim_src = 0;
  unsigned dim_tgt = 0;
  std::int64_t e_src = 0;
  std::int64_t e_tgt = 0;
  bool homeomorphic_proxy = false;
};

PsiDefect psi_defect(const Ideal& i, const Ideal& j, const LocalConfig& config = {});

// dim of the source of the surjection above against dim(M (x)_R N), and
// e(M (x)_R N) against e(M) e(N); the two comparisons must agree.
struct DimcutCheck {
  unsigned lhs_dim = 0;
  unsigned rhs_dim = 0;
  std::int64_t e_tensor = 0;
  std::int64_t e_product = 0;
  bool consistent = false;
};

DimcutCheck dimcut_check(const Ideal& i, const Ideal& j, const LocalConfig& config = {});

// Throws unless the ring has a uniformizer and t is a non-zerodivisor
// modulo both ideals.
void require_flat_pair(const Ideal& i, const Ideal& j, const GbConfig& config = {});

}  // namespace locmult
