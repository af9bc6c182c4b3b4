#include "polyalg/signature.hpp"

#include <algorithm>
#include <set>

#include "polyalg/errors.hpp"
#include "polyalg/monomial.hpp"

namespace locmult {

SignaturePtr RingSignature::make(Field field, std::vector<std::string> variables,
                                 std::optional<std::string> uniformizer) {
  if (variables.size() > kMaxArity)
    throw PreconditionError("arity", "at most " + std::to_string(kMaxArity) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (!seen.insert(v).second) throw PreconditionError("duplicate-variable", "duplicate variable " + v);
  std::optional<std::size_t> u;
  if (uniformizer) {
    auto it = std::find(variables.begin(), variables.end(), *uniformizer);
    if (it == variables.end())
      throw PreconditionError("unknown-variable", "uniformizer " + *uniformizer + " is not a ring variable");
    u = static_cast<std::size_t>(it - variables.begin());
  }
  return SignaturePtr(new RingSignature(field, std::move(variables), u));
}

std::optional<std::size_t> RingSignature::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

bool RingSignature::operator==(const RingSignature& other) const noexcept {
  return field_ == other.field_ && variables_ == other.variables_ && uniformizer_ == other.uniformizer_;
}

std::string RingSignature::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ", ";
    s += variables_[i];
  }
  s += "]";
  if (uniformizer_) s += " uniformizer " + variables_[*uniformizer_];
  return s;
}

}  // namespace locmult
