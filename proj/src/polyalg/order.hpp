#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyalg/monomial.hpp"

namespace locmult {

// Monomial orders.  Variable 0 is the greatest variable.
//
//   grevlex        total degree, then reverse lexicographic
//   lex            pure lexicographic
//   block(k)       grevlex on variables [0, k), ties broken by grevlex on [k, n);
//                  eliminates the first k variables
//   weighted(W, t) compare the weight rows of W in turn, then tie-break t
//   local_degree   lowest total degree first, ties by grevlex.  Not a
//                  well-order on k[x]; only valid for truncated computations.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block, weighted, local_degree };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder block(std::size_t split);
  static MonomialOrder weighted(std::vector<std::vector<long>> rows, Kind tie_break = Kind::grevlex);
  static MonomialOrder local_degree() { return MonomialOrder(Kind::local_degree); }

  Kind kind() const noexcept { return kind_; }
  bool is_global() const noexcept { return kind_ != Kind::local_degree; }
  // True when the order compares total degree before anything else.
  bool is_graded() const noexcept;

  // <0, 0, >0 as a is smaller, equal, greater than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  // Stable textual key; equal orders have equal keys.
  std::string key() const;

  bool operator==(const MonomialOrder& other) const { return key() == other.key(); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t split_ = 0;
  std::vector<std::vector<long>> rows_;
  Kind tie_ = Kind::grevlex;
};

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept;
int lex_compare(const Monomial& a, const Monomial& b) noexcept;

}  // namespace locmult
