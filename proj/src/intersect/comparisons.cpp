#include "intersect/comparisons.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

// in(I)(t, x_1) + in(J)(t, x_2) in the collapsed graded ring.
Ideal collapsed_cone_sum(const TangentCone& a, const TangentCone& b, const DoubledRing& ring) {
  return ideal_sum(map_ideal(a.ideal, ring.collapsed, ring.collapse_first),
                   map_ideal(b.ideal, ring.collapsed, ring.collapse_second));
}

}  // namespace

void require_flat_pair(const Ideal& i, const Ideal& j, const GbConfig& config) {
  if (!same_ring(i.signature_ptr(), j.signature_ptr()))
    throw PreconditionError("signature-mismatch", "both ideals must live in the same base ring");
  if (!i.signature().uniformizer()) throw PreconditionError("no-uniformizer", "the ring declares no uniformizer");
  for (const Ideal* p : {&i, &j})
    if (!flatness_over_uniformizer(*p, config))
      throw PreconditionError("not-flat", "the uniformizer is a zerodivisor modulo " + p->to_string());
}

SamuelCheck samuel_check(const Ideal& i, const Ideal& j, const LocalConfig& config, unsigned degree) {
  DoubledRing ring = make_doubled(i.signature_ptr());
  TangentCone a = tangent_cone(i, config.cone());
  TangentCone b = tangent_cone(j, config.cone());
  TangentCone whole = tangent_cone(tensor_over_field(i, j, ring), config.cone());

  SamuelCheck out;
  Ideal product = ideal_sum(map_ideal(a.ideal, ring.doubled, ring.first), map_ideal(b.ideal, ring.doubled, ring.second));
  out.ideal_match = ideal_equal(whole.ideal, product, config.gb);
  out.tensor_hf = whole.series.hilbert_function(degree);
  auto fa = a.series.hilbert_function(degree);
  auto fb = b.series.hilbert_function(degree);
  for (unsigned n = 0; n <= degree; ++n) {
    std::int64_t s = 0;
    for (unsigned k = 0; k <= n; ++k) s += fa[k] * fb[n - k];
    out.convolution.push_back(s);
  }
  out.convolution_match = out.convolution == out.tensor_hf;
  return out;
}

PsiDefect psi_defect(const Ideal& i, const Ideal& j, const LocalConfig& config) {
  require_flat_pair(i, j, config.gb);
  DoubledRing ring = make_doubled(i.signature_ptr());
  TangentCone a = tangent_cone(i, config.cone());
  TangentCone b = tangent_cone(j, config.cone());
  Ideal source = collapsed_cone_sum(a, b, ring);
  TangentCone target = tangent_cone(tensor_over_dvr(i, j, ring), config.cone());

  PsiDefect out;
  out.containment = contains(target.ideal, source, config.gb);
  HilbertSeries src = hilbert_series(source, config.gb);
  out.dim_src = src.pole_order;
  out.e_src = src.multiplicity();
  out.dim_tgt = target.dimension;
  out.e_tgt = target.series.multiplicity();
  out.homeomorphic_proxy = out.dim_src == out.dim_tgt && out.e_src == out.e_tgt;
  return out;
}

DimcutCheck dimcut_check(const Ideal& i, const Ideal& j, const LocalConfig& config) {
  require_flat_pair(i, j, config.gb);
  DoubledRing ring = make_doubled(i.signature_ptr());
  TangentCone a = tangent_cone(i, config.cone());
  TangentCone b = tangent_cone(j, config.cone());
  TangentCone tensor = tangent_cone(tensor_over_dvr(i, j, ring), config.cone());

  DimcutCheck out;
  out.lhs_dim = krull_dim(collapsed_cone_sum(a, b, ring), config.gb);
  out.rhs_dim = tensor.dimension;
  out.e_tensor = tensor.series.multiplicity();
  out.e_product = a.series.multiplicity() * b.series.multiplicity();
  out.consistent = (out.lhs_dim == out.rhs_dim) == (out.e_tensor == out.e_product);
  return out;
}

}  // namespace locmult
