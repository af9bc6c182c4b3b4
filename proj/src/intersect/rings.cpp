#include "intersect/rings.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

void require_same_base(const Ideal& i, const Ideal& j) {
  if (!same_ring(i.signature_ptr(), j.signature_ptr()))
    throw PreconditionError("signature-mismatch", "both ideals must live in the same base ring");
}

}  // namespace

DoubledRing make_doubled(const SignaturePtr& base) {
  const std::size_t n = base->arity();
  DoubledRing r;
  r.base = base;
  std::vector<std::string> names;
  for (const auto& v : base->variables()) names.push_back(v + "_1");
  for (const auto& v : base->variables()) names.push_back(v + "_2");
  r.doubled = RingSignature::make(base->field(), names);
  r.first.resize(n);
  r.second.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.first[i] = i;
    r.second[i] = n + i;
  }

  if (auto u = base->uniformizer()) {
    std::vector<std::string> collapsed;
    r.collapse_first.resize(n);
    r.collapse_second.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.collapse_first[i] = collapsed.size();
      collapsed.push_back(i == *u ? base->variable(i) : base->variable(i) + "_1");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == *u) {
        r.collapse_second[i] = r.collapse_first[i];
        continue;
      }
      r.collapse_second[i] = collapsed.size();
      collapsed.push_back(base->variable(i) + "_2");
    }
    r.collapsed = RingSignature::make(base->field(), collapsed, base->variable(*u));
  }
  return r;
}

Ideal diagonal_ideal(const DoubledRing& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.base->arity(); ++i)
    gens.push_back(Polynomial::variable(ring.doubled, *ring.first[i]) -
                   Polynomial::variable(ring.doubled, *ring.second[i]));
  return Ideal(ring.doubled, std::move(gens));
}

Ideal tensor_over_field(const Ideal& i, const Ideal& j, const DoubledRing& ring) {
  require_same_base(i, j);
  return ideal_sum(map_ideal(i, ring.doubled, ring.first), map_ideal(j, ring.doubled, ring.second));
}

Ideal tensor_over_field(const Ideal& i, const Ideal& j) {
  return tensor_over_field(i, j, make_doubled(i.signature_ptr()));
}

Ideal tensor_over_dvr(const Ideal& i, const Ideal& j, const DoubledRing& ring) {
  require_same_base(i, j);
  if (!ring.collapsed) throw PreconditionError("no-uniformizer", "the base ring declares no uniformizer");
  return ideal_sum(map_ideal(i, ring.collapsed, ring.collapse_first),
                   map_ideal(j, ring.collapsed, ring.collapse_second));
}

Ideal tensor_over_dvr(const Ideal& i, const Ideal& j) {
  return tensor_over_dvr(i, j, make_doubled(i.signature_ptr()));
}

bool flatness_over_uniformizer(const Ideal& ideal, const GbConfig& config) {
  auto u = ideal.signature().uniformizer();
  if (!u) throw PreconditionError("no-uniformizer", "the ring declares no uniformizer");
  Polynomial t = Polynomial::variable(ideal.signature_ptr(), *u);
  return ideal_equal(ideal_quotient_by_poly(ideal, t, config), ideal, config);
}

}  // namespace locmult
