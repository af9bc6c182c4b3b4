#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace locmult {

using Scalar = mpq_class;

// Coefficient field: exact rationals or a prime field F_p, p < 2^31.
// Prime-field elements are kept as integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar from_integer(const mpz_class& n) const;
  Scalar from_integer(long n) const { return from_integer(mpz_class(n)); }

  // Brings an arbitrary rational into canonical form for this field.
  void normalize(Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& other) const noexcept { return p_ == other.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace locmult
