#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyalg/field.hpp"

namespace locmult {

// Fixes the local ring k[x_1..x_n] localized at the origin.  The optional
// uniformizer names the variable that plays the role of t in k[[t]].
class RingSignature {
 public:
  static std::shared_ptr<const RingSignature> make(Field field, std::vector<std::string> variables,
                                                   std::optional<std::string> uniformizer = {});

  const Field& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::optional<std::size_t> uniformizer() const noexcept { return uniformizer_; }

  bool operator==(const RingSignature& other) const noexcept;
  std::string to_string() const;

 private:
  RingSignature(Field field, std::vector<std::string> variables, std::optional<std::size_t> u)
      : field_(field), variables_(std::move(variables)), uniformizer_(u) {}

  Field field_;
  std::vector<std::string> variables_;
  std::optional<std::size_t> uniformizer_;
};

using SignaturePtr = std::shared_ptr<const RingSignature>;

inline bool same_ring(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace locmult
