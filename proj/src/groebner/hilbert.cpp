#include "groebner/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "polyalg/errors.hpp"
#include "polyalg/order.hpp"

namespace locmult {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetError("overflow", "Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("overflow", "Hilbert series coefficient overflow");
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b, unsigned shift_b) {
  Poly r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] = checked_add(r[i + shift_b], b[i]);
  trim(r);
  return r;
}

// (1 - u^d) * p
Poly times_one_minus(const Poly& p, unsigned d) {
  Poly r(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = checked_add(r[i], p[i]);
    r[i + d] = checked_add(r[i + d], -p[i]);
  }
  trim(r);
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g[i].coprime(g[j])) return false;
  return true;
}

Poly numerator_rec(std::vector<Monomial> gens, std::size_t arity) {
  if (gens.empty()) return Poly{1};
  for (const auto& m : gens)
    if (m.is_one()) return Poly{};
  if (pairwise_coprime(gens)) {
    Poly r{1};
    for (const auto& m : gens) r = times_one_minus(r, m.degree());
    return r;
  }
  // Pivot: the variable shared by the most generators, to its least positive power.
  std::vector<unsigned> count(arity, 0);
  for (const auto& m : gens)
    for (std::size_t v = 0; v < arity; ++v)
      if (m[v]) ++count[v];
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  unsigned power = kMaxExponent;
  for (const auto& m : gens)
    if (m[var]) power = std::min(power, m[var]);
  Monomial pivot = Monomial::variable(arity, var, power);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) colon.push_back(m / m.gcd(pivot));

  Poly a = numerator_rec(minimalize(std::move(with_pivot)), arity);
  Poly b = numerator_rec(minimalize(std::move(colon)), arity);
  return poly_add(a, b, pivot.degree());
}

struct CoverSearch {
  std::vector<std::uint32_t> supports;
  unsigned best;

  void run(std::uint32_t chosen, unsigned size) {
    if (size >= best) return;
    const std::uint32_t* open = nullptr;
    for (const auto& s : supports) {
      if (s & chosen) continue;
      if (!open || std::popcount(s) < std::popcount(*open)) open = &s;
    }
    if (!open) {
      best = size;
      return;
    }
    for (std::uint32_t bits = *open; bits; bits &= bits - 1) {
      std::uint32_t v = bits & (~bits + 1);
      run(chosen | v, size + 1);
    }
  }
};

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t arity) {
  return numerator_rec(minimalize(gens), arity);
}

HilbertSeries cancel_series(std::vector<std::int64_t> numerator, std::size_t arity) {
  trim(numerator);
  if (numerator.empty()) throw PreconditionError("unit-ideal", "Hilbert series of the zero ring");
  unsigned d = static_cast<unsigned>(arity);
  auto value_at_one = [](const Poly& p) {
    std::int64_t s = 0;
    for (auto c : p) s = checked_add(s, c);
    return s;
  };
  while (d > 0 && value_at_one(numerator) == 0) {
    // Synthetic division by (1 - u): q_i = sum_{j<=i} n_j.
    Poly q(numerator.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      acc = checked_add(acc, numerator[i]);
      q[i] = acc;
    }
    numerator = std::move(q);
    trim(numerator);
    --d;
  }
  return HilbertSeries{std::move(numerator), d};
}

HilbertSeries monomial_hilbert_series(const std::vector<Monomial>& gens, std::size_t arity) {
  return cancel_series(hilbert_numerator(gens, arity), arity);
}

unsigned monomial_krull_dim(const std::vector<Monomial>& gens, std::size_t arity) {
  CoverSearch search{{}, static_cast<unsigned>(arity) + 1};
  for (const auto& m : minimalize(gens)) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < arity; ++v)
      if (m[v]) s |= std::uint32_t{1} << v;
    if (s == 0) throw PreconditionError("unit-ideal", "Krull dimension of the zero ring");
    search.supports.push_back(s);
  }
  search.run(0, 0);
  return static_cast<unsigned>(arity) - search.best;
}

std::int64_t HilbertSeries::multiplicity() const {
  std::int64_t s = 0;
  for (auto c : numerator) s = checked_add(s, c);
  return s;
}

std::int64_t HilbertSeries::coefficient(unsigned n) const {
  if (pole_order == 0) return n < numerator.size() ? numerator[n] : 0;
  // sum_k N_k * C(n - k + d - 1, d - 1)
  std::int64_t total = 0;
  for (std::size_t k = 0; k < numerator.size() && k <= n; ++k) {
    std::int64_t binom = 1;
    std::int64_t top = std::int64_t(n - k) + pole_order - 1;
    for (unsigned i = 1; i < pole_order; ++i) binom = checked_mul(binom, top - i + 1) / i;
    total = checked_add(total, checked_mul(numerator[k], binom));
  }
  return total;
}

std::vector<std::int64_t> HilbertSeries::hilbert_function(unsigned max_degree) const {
  std::vector<std::int64_t> out;
  for (unsigned n = 0; n <= max_degree; ++n) out.push_back(coefficient(n));
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    std::int64_t c = numerator[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "u" : "u^" + std::to_string(i));
    std::int64_t a = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty())
      s += std::to_string(a);
    else
      s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  s += ")";
  if (pole_order == 1) s += "/(1-u)";
  if (pole_order > 1) s += "/(1-u)^" + std::to_string(pole_order);
  return s;
}

}  // namespace locmult
