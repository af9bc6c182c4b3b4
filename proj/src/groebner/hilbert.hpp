#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyalg/monomial.hpp"

namespace locmult {

// Hilbert series numerator(u) / (1-u)^pole_order of a standard graded
// quotient, fully cancelled so that numerator(1) != 0.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  unsigned pole_order = 0;

  // numerator(1): the multiplicity of the graded quotient.
  std::int64_t multiplicity() const;
  // Dimension of the degree-n component.
  std::int64_t coefficient(unsigned n) const;
  std::vector<std::int64_t> hilbert_function(unsigned max_degree) const;
  std::string to_string() const;

  bool operator==(const HilbertSeries&) const = default;
};

// Numerator N(u) with HS(k[x]/(gens)) = N(u)/(1-u)^arity, computed by the
// pivot recursion N(I) = N(I + (p)) + u^deg(p) N(I : p).
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t arity);

// Divides out (1-u) factors.  Throws on the zero numerator (unit ideal).
HilbertSeries cancel_series(std::vector<std::int64_t> numerator, std::size_t arity);

HilbertSeries monomial_hilbert_series(const std::vector<Monomial>& gens, std::size_t arity);

// Krull dimension of k[x]/(gens): arity minus a minimum set of variables
// meeting the support of every generator.
unsigned monomial_krull_dim(const std::vector<Monomial>& gens, std::size_t arity);

// Drops generators divisible by another generator; result sorted, deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace locmult
