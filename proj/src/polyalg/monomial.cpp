#include "polyalg/monomial.hpp"

#include <string>

#include "polyalg/errors.hpp"

namespace locmult {

Monomial::Monomial(std::size_t arity, std::initializer_list<unsigned> exps)
    : arity_(static_cast<std::uint8_t>(arity)) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > kMaxExponent) throw BudgetError("exponent", "exponent exceeds " + std::to_string(kMaxExponent));
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > kMaxExponent) throw BudgetError("exponent", "exponent exceeds " + std::to_string(kMaxExponent));
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace locmult
