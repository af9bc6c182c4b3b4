#include "polyalg/field.hpp"

#include "polyalg/errors.hpp"

namespace locmult {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw PreconditionError("bad-field", "prime field characteristic must be < 2^31");
  if (!is_prime(p))
    throw PreconditionError("bad-field", "F" + std::to_string(p) + ": characteristic is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Field::from_integer(const mpz_class& n) const {
  if (is_rationals()) return Scalar(n);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return Scalar(r);
}

void Field::normalize(Scalar& a) const {
  if (is_rationals()) {
    a.canonicalize();
    return;
  }
  mpz_class p(p_);
  mpz_class num, den;
  mpz_fdiv_r(num.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  mpz_fdiv_r(den.get_mpz_t(), a.get_den_mpz_t(), p.get_mpz_t());
  if (den == 0) throw PreconditionError("division-by-zero", "denominator vanishes in " + name());
  if (den != 1) {
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num *= den;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  }
  a = Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (!is_rationals() && r >= p_) r -= p_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (!is_rationals() && r < 0) r += p_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return -a;
  if (a == 0) return a;
  return Scalar(p_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw PreconditionError("division-by-zero", "inverse of zero");
  if (is_rationals()) return 1 / a;
  mpz_class r;
  mpz_class p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

}  // namespace locmult
