#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "polyalg/polynomial.hpp"

namespace locmult {

struct GbConfig {
  // Largest lcm degree of an S-pair the engine will process.
  unsigned max_degree = 40;
  // Largest number of S-pairs the engine will reduce.
  std::size_t max_pairs = 2'000'000;
};

// Reduced Groebner basis: monic elements, each fully reduced against the
// others, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(SignaturePtr sig, MonomialOrder order, std::vector<std::vector<Term>> elements);

  const SignaturePtr& signature_ptr() const noexcept { return sig_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return sorted_.size(); }
  bool is_zero_ideal() const noexcept { return sorted_.empty(); }
  bool is_unit_ideal() const noexcept { return sorted_.size() == 1 && leads_.front().is_one(); }

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leads() const noexcept { return leads_; }
  // Element i with terms in descending order().
  const std::vector<Term>& ordered(std::size_t i) const { return sorted_.at(i); }

 private:
  SignaturePtr sig_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> sorted_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

GroebnerBasis buchberger(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order, const GbConfig& config = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Leading monomials of a reduced standard basis of (generators) + m^bound in
// k[x]/m^bound under the local degree order.  The lead ideal agrees with the
// lead ideal of the tangent cone in every degree below `bound`.
std::vector<Monomial> truncated_local_leads(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                                            unsigned bound, const GbConfig& config = {});

// Every S-polynomial of the basis reduces to zero.
bool s_pairs_confluent(const GroebnerBasis& basis);

}  // namespace locmult
