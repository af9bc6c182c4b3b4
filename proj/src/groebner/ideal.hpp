#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "groebner/basis.hpp"
#include "groebner/hilbert.hpp"
#include "polyalg/polynomial.hpp"

namespace locmult {

// Finitely generated ideal of a polynomial ring.  Zero generators are
// dropped, so the zero ideal has no generators.  Reduced bases are cached per
// order; copies share the cache.
class Ideal {
 public:
  Ideal(SignaturePtr sig, std::vector<Polynomial> generators);

  static Ideal zero(SignaturePtr sig) { return Ideal(std::move(sig), {}); }
  static Ideal unit(SignaturePtr sig);
  // The ideal generated by the listed variables; all of them when empty.
  static Ideal of_variables(SignaturePtr sig, std::vector<std::size_t> vars = {});

  const SignaturePtr& signature_ptr() const noexcept { return sig_; }
  const RingSignature& signature() const noexcept { return *sig_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const noexcept;
  // Every generator vanishes at the origin.
  bool inside_maximal() const noexcept;

  std::shared_ptr<const GroebnerBasis> basis(const MonomialOrder& order = MonomialOrder::grevlex(),
                                             const GbConfig& config = {}) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
  };

  SignaturePtr sig_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool contains(const Ideal& ideal, const Polynomial& f, const GbConfig& config = {});
// inner ⊆ outer
bool contains(const Ideal& outer, const Ideal& inner, const GbConfig& config = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);
bool ideal_equal(const Ideal& a, const Ideal& b, const GbConfig& config = {});
Ideal with_generator(const Ideal& a, const Polynomial& f);

// dim_k k[x]/I, or nullopt when infinite.
std::optional<std::uint64_t> colength(const Ideal& ideal, const GbConfig& config = {});
unsigned krull_dim(const Ideal& ideal, const GbConfig& config = {});
HilbertSeries hilbert_series(const Ideal& ideal, const GbConfig& config = {});

// I ∩ k[remaining variables], returned in the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GbConfig& config = {});
// Same ideal viewed in the ring without `drop`; generators must avoid them.
Ideal drop_variables(const Ideal& ideal, const std::vector<std::size_t>& drop);

Ideal ideal_quotient_by_poly(const Ideal& ideal, const Polynomial& f, const GbConfig& config = {});
bool radical_membership(const Polynomial& f, const Ideal& ideal, const GbConfig& config = {});

// Image of an ideal under a variable map into another ring.
Ideal map_ideal(const Ideal& ideal, const SignaturePtr& target, const VariableMap& map);
// Copy of `sig` with fresh variables appended (names must be new).
SignaturePtr extend_signature(const SignaturePtr& sig, const std::vector<std::string>& extra);

}  // namespace locmult
