#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace locmult {

inline constexpr std::size_t kMaxArity = 32;
inline constexpr unsigned kMaxExponent = 0xFFFF;

// Exponent vector with inline storage.  Entries past arity() are always 0,
// so element-wise operations can run over the whole array.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {}
  Monomial(std::size_t arity, std::initializer_list<unsigned> exps);

  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const noexcept { return arity_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const noexcept { return degree_ == 0; }
  std::span<const std::uint16_t> exponents() const noexcept { return {exps_.data(), arity_}; }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] && other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial gcd(const Monomial& other) const noexcept;

  bool operator==(const Monomial& other) const noexcept {
    return arity_ == other.arity_ && exps_ == other.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxArity> exps_{};
  std::uint8_t arity_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace locmult
