#include "polyalg/polynomial.hpp"

#include <algorithm>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

void require_same(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.signature_ptr(), g.signature_ptr()))
    throw PreconditionError("signature-mismatch", "polynomials live in different rings: " +
                                                      f.signature().to_string() + " vs " +
                                                      g.signature().to_string());
}

bool grevlex_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

}  // namespace

Polynomial Polynomial::constant(SignaturePtr sig, const Scalar& c) {
  return monomial(sig, Monomial(sig->arity()), c);
}

Polynomial Polynomial::variable(SignaturePtr sig, std::size_t index) {
  auto arity = sig->arity();
  return monomial(std::move(sig), Monomial::variable(arity, index), Scalar(1));
}

Polynomial Polynomial::monomial(SignaturePtr sig, const Monomial& m, const Scalar& c) {
  std::vector<Term> t;
  t.push_back({m, c});
  return from_terms(std::move(sig), std::move(t));
}

Polynomial Polynomial::from_terms(SignaturePtr sig, std::vector<Term> terms) {
  Polynomial p(std::move(sig));
  const Field& k = p.field();
  for (auto& t : terms) {
    if (t.mono.arity() != p.sig_->arity())
      throw PreconditionError("arity", "monomial arity does not match ring");
    k.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Polynomial::involves(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(sig_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(sig_, other.sig_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string format_scalar(const Scalar& c) { return c.get_str(); }

std::string format_monomial(const Monomial& m, const RingSignature& sig) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += sig.variable(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      s += format_scalar(c);
    } else {
      if (c != 1) s += format_scalar(c) + "*";
      s += format_monomial(t.mono, *sig_);
    }
  }
  return s;
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  const Field& k = f.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto i = f.terms().begin(), j = g.terms().begin();
  while (i != f.terms().end() || j != g.terms().end()) {
    int c = i == f.terms().end()   ? -1
            : j == g.terms().end() ? 1
                                   : grevlex_compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Scalar s = k.add(i->coeff, j->coeff);
      if (s != 0) out.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  // Already sorted and normalized; from_terms is cheap on sorted input.
  return Polynomial::from_terms(f.signature_ptr(), std::move(out));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, -g); }

Polynomial scale(const Scalar& c, const Polynomial& f) {
  std::vector<Term> out;
  Scalar cc = c;
  f.field().normalize(cc);
  if (cc == 0) return Polynomial(f.signature_ptr());
  for (const auto& t : f.terms()) out.push_back({t.mono, f.field().mul(cc, t.coeff)});
  return Polynomial::from_terms(f.signature_ptr(), std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) out.push_back({a.mono * b.mono, f.field().mul(a.coeff, b.coeff)});
  return Polynomial::from_terms(f.signature_ptr(), std::move(out));
}

Polynomial pow(const Polynomial& f, unsigned n) {
  Polynomial r = Polynomial::constant(f.signature_ptr(), 1);
  Polynomial base = f;
  while (n) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return r;
}

std::optional<unsigned> total_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  return f.terms().front().mono.degree();
}

unsigned order_of(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("zero-polynomial", "order of the zero polynomial is undefined");
  return f.terms().back().mono.degree();
}

Polynomial homogeneous_part(const Polynomial& f, unsigned d) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.degree() == d) out.push_back(t);
  return Polynomial::from_terms(f.signature_ptr(), std::move(out));
}

Polynomial initial_form(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("zero-polynomial", "initial form of the zero polynomial");
  return homogeneous_part(f, order_of(f));
}

VariableMap map_by_name(const RingSignature& source, const RingSignature& target) {
  VariableMap map(source.arity());
  for (std::size_t i = 0; i < source.arity(); ++i) map[i] = target.index_of(source.variable(i));
  return map;
}

Polynomial rename_embed(const Polynomial& f, const SignaturePtr& target, const VariableMap& map) {
  if (map.size() != f.signature().arity())
    throw PreconditionError("bad-map", "variable map arity does not match source ring");
  if (!(f.field() == target->field()))
    throw PreconditionError("signature-mismatch", "source and target fields differ");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (!t.mono[i]) continue;
      if (!map[i])
        throw PreconditionError("unmapped-variable",
                                "variable " + f.signature().variable(i) + " has no image in " + target->to_string());
      m.set(*map[i], m[*map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, const SignaturePtr& target, const std::vector<Polynomial>& images) {
  if (images.size() != f.signature().arity())
    throw PreconditionError("bad-map", "substitution arity does not match source ring");
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i]) p = mul(p, pow(images[i], t.mono[i]));
    out = add(out, p);
  }
  return out;
}

std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Term> t = f.terms();
  if (order.kind() != MonomialOrder::Kind::grevlex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return t;
}

}  // namespace locmult
