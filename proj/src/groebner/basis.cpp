#include "groebner/basis.hpp"

#include <algorithm>
#include <string>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

using TermVec = std::vector<Term>;

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const Field& field, const MonomialOrder& order, unsigned truncate, const GbConfig& config)
      : k_(field), order_(order), truncate_(truncate), config_(config) {}

  // Runs Buchberger's algorithm; returns the reduced basis.
  std::vector<TermVec> run(std::vector<TermVec> inputs) {
    for (auto& f : inputs) {
      truncate_in_place(f);
      TermVec h = reduce(std::move(f));
      if (h.empty()) continue;
      make_monic(h);
      if (h.front().mono.is_one()) return {std::move(h)};
      update(std::move(h));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto best = select_pair();
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (truncate_ && p.lcm.degree() >= truncate_) continue;
      if (!truncate_ && p.lcm.degree() > config_.max_degree)
        throw BudgetError("max-degree", "S-pair of degree " + std::to_string(p.lcm.degree()) +
                                            " exceeds the degree cap " + std::to_string(config_.max_degree));
      if (++processed > config_.max_pairs)
        throw BudgetError("max-pairs", "S-pair budget of " + std::to_string(config_.max_pairs) + " exhausted");
      TermVec h = reduce(s_polynomial(polys_[p.i], polys_[p.j], p.lcm));
      if (h.empty()) continue;
      make_monic(h);
      if (h.front().mono.is_one()) return {std::move(h)};
      update(std::move(h));
    }
    return interreduce();
  }

  // Full reduction against the active elements.
  TermVec reduce(TermVec p) const {
    TermVec result;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Term& lt = p[pos];
      const TermVec* divisor = nullptr;
      for (std::size_t idx : active_) {
        if (polys_[idx].front().mono.divides(lt.mono)) {
          divisor = &polys_[idx];
          break;
        }
      }
      if (!divisor) {
        result.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      Monomial q = lt.mono / divisor->front().mono;
      Scalar c = lt.coeff;
      p = subtract_multiple(p, pos + 1, c, q, *divisor, 1);
      pos = 0;
    }
    return result;
  }

  void set_active(const std::vector<TermVec>& basis) {
    polys_ = basis;
    active_.clear();
    for (std::size_t i = 0; i < polys_.size(); ++i) active_.push_back(i);
  }

  TermVec s_polynomial(const TermVec& f, const TermVec& g, const Monomial& lcm) const {
    // f, g monic: S = (lcm/lm f) f - (lcm/lm g) g.
    TermVec left = multiply_tail(f, lcm / f.front().mono);
    return subtract_multiple(left, 0, Scalar(1), lcm / g.front().mono, g, 1);
  }

 private:
  void truncate_in_place(TermVec& f) const {
    if (!truncate_) return;
    f.erase(std::remove_if(f.begin(), f.end(), [&](const Term& t) { return t.mono.degree() >= truncate_; }),
            f.end());
  }

  void make_monic(TermVec& h) const {
    if (h.front().coeff == 1) return;
    Scalar inv = k_.inv(h.front().coeff);
    for (auto& t : h) t.coeff = k_.mul(t.coeff, inv);
  }

  // q * (g without its leading term), truncated.
  TermVec multiply_tail(const TermVec& g, const Monomial& q) const {
    TermVec out;
    out.reserve(g.size());
    for (std::size_t j = 1; j < g.size(); ++j) {
      Monomial m = q * g[j].mono;
      if (truncate_ && m.degree() >= truncate_) continue;
      out.push_back({m, g[j].coeff});
    }
    return out;
  }

  // p[from..] - c * q * g[gfrom..], merged in descending order.
  TermVec subtract_multiple(const TermVec& p, std::size_t from, const Scalar& c, const Monomial& q,
                            const TermVec& g, std::size_t gfrom) const {
    TermVec out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = gfrom;
    Monomial gm;
    bool have_gm = false;
    auto next_g = [&]() {
      while (j < g.size()) {
        gm = q * g[j].mono;
        if (!truncate_ || gm.degree() < truncate_) {
          have_gm = true;
          return;
        }
        ++j;
      }
      have_gm = false;
    };
    next_g();
    while (i < p.size() || have_gm) {
      int cmp = i == p.size() ? -1 : !have_gm ? 1 : order_.compare(p[i].mono, gm);
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, k_.neg(k_.mul(c, g[j].coeff))});
        ++j;
        next_g();
      } else {
        Scalar s = k_.sub(p[i].coeff, k_.mul(c, g[j].coeff));
        if (s != 0) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
        next_g();
      }
    }
    return out;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
    }
    return best;
  }

  const Monomial& lead(std::size_t idx) const { return polys_[idx].front().mono; }

  // Gebauer-Moeller installation of a new element.
  void update(TermVec h) {
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = lead(hi);

    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lead(g).lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = lead(p.i).coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = candidates[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) dominated = kept[b].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!lead(p.i).coprime(lh)) fresh.push_back(p);

    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lead(p.i).lcm(lh) == p.lcm) && !(lead(p.j).lcm(lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs_ = std::move(survivors);

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!lh.divides(lead(g))) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
  }

  std::vector<TermVec> interreduce() {
    std::vector<TermVec> out;
    std::vector<std::size_t> members = active_;
    for (std::size_t idx : members) {
      // Reduce the tail of idx against all other active elements.
      std::vector<std::size_t> saved = active_;
      active_.erase(std::find(active_.begin(), active_.end(), idx));
      TermVec tail(polys_[idx].begin() + 1, polys_[idx].end());
      TermVec reduced = reduce(std::move(tail));
      active_ = std::move(saved);
      TermVec g;
      g.reserve(reduced.size() + 1);
      g.push_back(polys_[idx].front());
      for (auto& t : reduced) g.push_back(std::move(t));
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [&](const TermVec& a, const TermVec& b) { return order_.compare(a.front().mono, b.front().mono) < 0; });
    return out;
  }

  const Field& k_;
  const MonomialOrder& order_;
  unsigned truncate_;
  GbConfig config_;
  std::vector<TermVec> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::vector<TermVec> prepare_inputs(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<TermVec> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(sorted_terms(g, order));
  // Smallest leading monomials first keeps the run deterministic and cheap.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const TermVec& a, const TermVec& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  return inputs;
}

void check_inputs(const SignaturePtr& sig, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!same_ring(sig, g.signature_ptr()))
      throw PreconditionError("signature-mismatch", "generator " + g.to_string() + " is not in " + sig->to_string());
}

}  // namespace

GroebnerBasis::GroebnerBasis(SignaturePtr sig, MonomialOrder order, std::vector<std::vector<Term>> elements)
    : sig_(std::move(sig)), order_(std::move(order)), sorted_(std::move(elements)) {
  for (const auto& e : sorted_) {
    elements_.push_back(Polynomial::from_terms(sig_, e));
    leads_.push_back(e.front().mono);
  }
}

GroebnerBasis buchberger(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order, const GbConfig& config) {
  if (!order.is_global())
    throw PreconditionError("bad-order", "Buchberger's algorithm needs a global monomial order");
  check_inputs(sig, generators);
  Engine engine(sig->field(), order, 0, config);
  return GroebnerBasis(sig, order, engine.run(prepare_inputs(generators, order)));
}

std::vector<Monomial> truncated_local_leads(const SignaturePtr& sig, const std::vector<Polynomial>& generators,
                                            unsigned bound, const GbConfig& config) {
  check_inputs(sig, generators);
  if (bound == 0) return {Monomial(sig->arity())};
  MonomialOrder order = MonomialOrder::local_degree();
  Engine engine(sig->field(), order, bound, config);
  std::vector<Monomial> leads;
  for (const auto& e : engine.run(prepare_inputs(generators, order))) leads.push_back(e.front().mono);
  return leads;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!same_ring(f.signature_ptr(), basis.signature_ptr()))
    throw PreconditionError("signature-mismatch", "normal form across different rings");
  Engine engine(f.field(), basis.order(), 0, GbConfig{});
  std::vector<TermVec> elems;
  for (std::size_t i = 0; i < basis.size(); ++i) elems.push_back(basis.ordered(i));
  engine.set_active(elems);
  return Polynomial::from_terms(f.signature_ptr(), engine.reduce(sorted_terms(f, basis.order())));
}

bool s_pairs_confluent(const GroebnerBasis& basis) {
  const auto& sig = basis.signature_ptr();
  Engine engine(sig->field(), basis.order(), 0, GbConfig{});
  std::vector<TermVec> elems;
  for (std::size_t i = 0; i < basis.size(); ++i) elems.push_back(basis.ordered(i));
  for (const auto& e : elems)
    if (e.front().coeff != 1) return false;
  engine.set_active(elems);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      Monomial l = elems[i].front().mono.lcm(elems[j].front().mono);
      if (!engine.reduce(engine.s_polynomial(elems[i], elems[j], l)).empty()) return false;
    }
  }
  // Reducedness: no term of any element is divisible by another element's lead.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elems[i])
        if (elems[j].front().mono.divides(t.mono)) return false;
    }
  return true;
}

}  // namespace locmult
