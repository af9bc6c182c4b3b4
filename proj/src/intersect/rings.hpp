#pragma once

#include <optional>

#include "groebner/ideal.hpp"

namespace locmult {

// Two copies of a base ring.  Variable v becomes v_1 and v_2; the doubled
// ring lists all first copies, then all second copies.  When the base ring
// has a uniformizer t, the collapsed ring shares a single t between the
// copies: the first copies in base order (t included) then the second
// copies without t.
struct DoubledRing {
  SignaturePtr base;
  SignaturePtr doubled;
  VariableMap first;
  VariableMap second;
  SignaturePtr collapsed;  // null without a uniformizer
  VariableMap collapse_first;
  VariableMap collapse_second;
};

DoubledRing make_doubled(const SignaturePtr& base);

// (x_1 - x_2, ...) in the doubled ring.
Ideal diagonal_ideal(const DoubledRing& ring);

// I(x_1) + J(x_2) in the doubled ring.
Ideal tensor_over_field(const Ideal& i, const Ideal& j, const DoubledRing& ring);
Ideal tensor_over_field(const Ideal& i, const Ideal& j);

// I(t, x_1) + J(t, x_2) in the collapsed ring.
Ideal tensor_over_dvr(const Ideal& i, const Ideal& j, const DoubledRing& ring);
Ideal tensor_over_dvr(const Ideal& i, const Ideal& j);

// The uniformizer is a non-zerodivisor modulo I: (I : t) = I.
bool flatness_over_uniformizer(const Ideal& ideal, const GbConfig& config = {});

}  // namespace locmult
