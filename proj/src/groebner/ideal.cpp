#include "groebner/ideal.hpp"

#include <algorithm>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

const char* const kAuxVariable = "@w";

// Quotient h / f when f divides h exactly; throws otherwise.
Polynomial divide_exact(const Polynomial& h, const Polynomial& f) {
  const Field& k = h.field();
  auto order = MonomialOrder::grevlex();
  std::vector<Term> quotient;
  Polynomial rest = h;
  const Term& lf = f.terms().front();
  while (!rest.is_zero()) {
    const Term& lr = rest.terms().front();
    if (!lf.mono.divides(lr.mono)) throw CertificateError("inexact division in ideal quotient");
    Term q{lr.mono / lf.mono, k.div(lr.coeff, lf.coeff)};
    quotient.push_back(q);
    rest = sub(rest, mul(Polynomial::monomial(h.signature_ptr(), q.mono, q.coeff), f));
  }
  return Polynomial::from_terms(h.signature_ptr(), std::move(quotient));
}

}  // namespace

Ideal::Ideal(SignaturePtr sig, std::vector<Polynomial> generators)
    : sig_(std::move(sig)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(sig_, g.signature_ptr()))
      throw PreconditionError("signature-mismatch", "generator " + g.to_string() + " is not in " + sig_->to_string());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(SignaturePtr sig) {
  auto one = Polynomial::constant(sig, 1);
  return Ideal(std::move(sig), {one});
}

Ideal Ideal::of_variables(SignaturePtr sig, std::vector<std::size_t> vars) {
  if (vars.empty())
    for (std::size_t i = 0; i < sig->arity(); ++i) vars.push_back(i);
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(sig, v));
  return Ideal(std::move(sig), std::move(gens));
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::inside_maximal() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.constant_term() == 0; });
}

std::shared_ptr<const GroebnerBasis> Ideal::basis(const MonomialOrder& order, const GbConfig& config) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  auto computed = std::make_shared<const GroebnerBasis>(buchberger(sig_, gens_, order, config));
  std::lock_guard<std::mutex> lock(cache_->mu);
  // A concurrent insert computed the identical reduced basis; keep the first.
  auto [it, inserted] = cache_->bases.emplace(key, computed);
  return it->second;
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

bool contains(const Ideal& ideal, const Polynomial& f, const GbConfig& config) {
  return normal_form(f, *ideal.basis(MonomialOrder::grevlex(), config)).is_zero();
}

bool contains(const Ideal& outer, const Ideal& inner, const GbConfig& config) {
  if (!same_ring(outer.signature_ptr(), inner.signature_ptr()))
    throw PreconditionError("signature-mismatch", "ideal containment across different rings");
  auto gb = outer.basis(MonomialOrder::grevlex(), config);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, *gb).is_zero(); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.signature_ptr(), b.signature_ptr()))
    throw PreconditionError("signature-mismatch", "ideal sum across different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.signature_ptr(), std::move(gens));
}

Ideal with_generator(const Ideal& a, const Polynomial& f) {
  std::vector<Polynomial> gens = a.generators();
  gens.push_back(f);
  return Ideal(a.signature_ptr(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  if (n == 0) return Ideal::unit(a.signature_ptr());
  const auto& g = a.generators();
  std::vector<Polynomial> out;
  // Enumerate non-decreasing index sequences of length n.
  std::vector<std::size_t> idx(n, 0);
  if (g.empty()) return Ideal::zero(a.signature_ptr());
  while (true) {
    Polynomial p = g[idx[0]];
    for (unsigned k = 1; k < n; ++k) p = mul(p, g[idx[k]]);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0 && idx[pos] == g.size() - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned k = pos + 1; k < n; ++k) idx[k] = idx[pos];
  }
  return Ideal(a.signature_ptr(), std::move(out));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GbConfig& config) {
  return contains(a, b, config) && contains(b, a, config);
}

std::optional<std::uint64_t> colength(const Ideal& ideal, const GbConfig& config) {
  auto gb = ideal.basis(MonomialOrder::grevlex(), config);
  if (gb->is_unit_ideal()) return 0;
  const std::size_t n = ideal.signature().arity();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(gb->leads().begin(), gb->leads().end(), [&](const Monomial& m) {
      return m[v] > 0 && m.degree() == m[v];
    });
    if (!pure) return std::nullopt;
  }
  HilbertSeries hs = monomial_hilbert_series(gb->leads(), n);
  return static_cast<std::uint64_t>(hs.multiplicity());
}

unsigned krull_dim(const Ideal& ideal, const GbConfig& config) {
  auto gb = ideal.basis(MonomialOrder::grevlex(), config);
  if (gb->is_unit_ideal()) throw PreconditionError("unit-ideal", "Krull dimension of the zero ring");
  return monomial_krull_dim(gb->leads(), ideal.signature().arity());
}

HilbertSeries hilbert_series(const Ideal& ideal, const GbConfig& config) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous())
      throw PreconditionError("non-homogeneous", "Hilbert series needs homogeneous generators; got " + g.to_string());
  auto gb = ideal.basis(MonomialOrder::grevlex(), config);
  return monomial_hilbert_series(gb->leads(), ideal.signature().arity());
}

SignaturePtr extend_signature(const SignaturePtr& sig, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = sig->variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  std::optional<std::string> u;
  if (sig->uniformizer()) u = sig->variable(*sig->uniformizer());
  return RingSignature::make(sig->field(), std::move(vars), u);
}

Ideal map_ideal(const Ideal& ideal, const SignaturePtr& target, const VariableMap& map) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rename_embed(g, target, map));
  return Ideal(target, std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GbConfig& config) {
  const auto& sig = ideal.signature_ptr();
  const std::size_t n = sig->arity();
  std::vector<bool> dropped(n, false);
  for (auto v : drop) dropped.at(v) = true;

  // Dropped variables first, so block(k) eliminates them.
  std::vector<std::size_t> perm;
  for (std::size_t v = 0; v < n; ++v)
    if (dropped[v]) perm.push_back(v);
  const std::size_t k = perm.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!dropped[v]) perm.push_back(v);
  std::vector<std::string> names;
  VariableMap forward(n), back(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(sig->variable(perm[i]));
    forward[perm[i]] = i;
    back[i] = perm[i];
  }
  auto permuted = RingSignature::make(sig->field(), names);
  Ideal moved = map_ideal(ideal, permuted, forward);
  auto gb = moved.basis(MonomialOrder::block(k), config);
  std::vector<Polynomial> kept;
  for (const auto& g : gb->elements()) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) free = !g.involves(i);
    if (free) kept.push_back(rename_embed(g, sig, back));
  }
  return Ideal(sig, std::move(kept));
}

Ideal drop_variables(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  const auto& sig = *ideal.signature_ptr();
  std::vector<std::string> names;
  for (std::size_t v = 0; v < sig.arity(); ++v)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) names.push_back(sig.variable(v));
  std::optional<std::string> u;
  if (sig.uniformizer() && std::find(drop.begin(), drop.end(), *sig.uniformizer()) == drop.end())
    u = sig.variable(*sig.uniformizer());
  auto target = RingSignature::make(sig.field(), names, u);
  return map_ideal(ideal, target, map_by_name(sig, *target));
}

Ideal ideal_quotient_by_poly(const Ideal& ideal, const Polynomial& f, const GbConfig& config) {
  if (f.is_zero()) throw PreconditionError("zero-polynomial", "ideal quotient by the zero polynomial");
  const auto& sig = ideal.signature_ptr();
  if (!same_ring(sig, f.signature_ptr()))
    throw PreconditionError("signature-mismatch", "ideal quotient across different rings");
  if (ideal.is_zero()) return ideal;

  // I ∩ (f) = (w I + (1 - w) f) ∩ k[x]
  auto ext = extend_signature(sig, {kAuxVariable});
  auto embed = map_by_name(*sig, *ext);
  const std::size_t w_index = sig->arity();
  Polynomial w = Polynomial::variable(ext, w_index);
  Polynomial one = Polynomial::constant(ext, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(mul(w, rename_embed(g, ext, embed)));
  gens.push_back(mul(sub(one, w), rename_embed(f, ext, embed)));
  Ideal intersection = eliminate(Ideal(ext, std::move(gens)), {w_index}, config);

  VariableMap back(ext->arity());
  for (std::size_t i = 0; i < sig->arity(); ++i) back[i] = i;
  std::vector<Polynomial> quotient;
  for (const auto& h : intersection.generators()) quotient.push_back(divide_exact(rename_embed(h, sig, back), f));
  return Ideal(sig, std::move(quotient));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const GbConfig& config) {
  if (f.is_zero()) return true;
  const auto& sig = ideal.signature_ptr();
  auto ext = extend_signature(sig, {kAuxVariable});
  auto embed = map_by_name(*sig, *ext);
  Polynomial w = Polynomial::variable(ext, sig->arity());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rename_embed(g, ext, embed));
  gens.push_back(sub(Polynomial::constant(ext, 1), mul(w, rename_embed(f, ext, embed))));
  return Ideal(ext, std::move(gens)).basis(MonomialOrder::grevlex(), config)->is_unit_ideal();
}

}  // namespace locmult
