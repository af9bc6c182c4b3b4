#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyalg/field.hpp"
#include "polyalg/monomial.hpp"
#include "polyalg/order.hpp"
#include "polyalg/signature.hpp"

namespace locmult {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Sparse polynomial over a RingSignature.  Terms are kept sorted by
// descending grevlex with no zero coefficients, so structural equality is
// polynomial equality.
class Polynomial {
 public:
  explicit Polynomial(SignaturePtr sig) : sig_(std::move(sig)) {}

  static Polynomial constant(SignaturePtr sig, const Scalar& c);
  static Polynomial variable(SignaturePtr sig, std::size_t index);
  static Polynomial monomial(SignaturePtr sig, const Monomial& m, const Scalar& c);
  // Combines like terms, reduces coefficients into the field, drops zeros.
  static Polynomial from_terms(SignaturePtr sig, std::vector<Term> terms);

  const RingSignature& signature() const noexcept { return *sig_; }
  const SignaturePtr& signature_ptr() const noexcept { return sig_; }
  const Field& field() const noexcept { return sig_->field(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Scalar constant_term() const;
  bool is_homogeneous() const noexcept;
  bool involves(std::size_t var) const noexcept;

  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  SignaturePtr sig_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Scalar& c, const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned n);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

// Highest term degree; nullopt for the zero polynomial.
std::optional<unsigned> total_degree(const Polynomial& f);
// Lowest term degree (the m-adic order); throws on zero.
unsigned order_of(const Polynomial& f);
// Sum of the terms of lowest total degree; throws on zero.
Polynomial initial_form(const Polynomial& f);
// Sum of the terms of exactly degree d (possibly zero).
Polynomial homogeneous_part(const Polynomial& f, unsigned d);

// Variable map from a source signature into a target: entry i is the target
// index of source variable i, or nullopt when unmapped.
using VariableMap = std::vector<std::optional<std::size_t>>;

VariableMap map_by_name(const RingSignature& source, const RingSignature& target);

// Image under the ring morphism induced by `map`.  Throws when a variable
// occurring in f is unmapped.  Several sources may share a target.
Polynomial rename_embed(const Polynomial& f, const SignaturePtr& target, const VariableMap& map);

// Image under the ring morphism sending variable i to images[i].
Polynomial substitute(const Polynomial& f, const SignaturePtr& target, const std::vector<Polynomial>& images);

// Terms of f sorted in descending `order`.
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order);

std::string format_monomial(const Monomial& m, const RingSignature& sig);
std::string format_scalar(const Scalar& c);

}  // namespace locmult
