#include "localalg/hilbert_samuel.hpp"

#include <algorithm>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

// Indices of the variables generating `a`, when a is generated by distinct
// variables (up to scalars).
std::optional<std::vector<std::size_t>> variable_generators(const Ideal& a) {
  std::vector<std::size_t> vars;
  for (const auto& g : a.generators()) {
    if (g.size() != 1) return std::nullopt;
    const Monomial& m = g.terms().front().mono;
    if (m.degree() != 1) return std::nullopt;
    for (std::size_t v = 0; v < m.arity(); ++v)
      if (m[v]) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool is_maximal(const Ideal& a) {
  auto vars = variable_generators(a);
  return vars && vars->size() == a.signature().arity();
}

// All monomials of degree n in the given variables.
std::vector<Polynomial> monomial_power(const SignaturePtr& sig, const std::vector<std::size_t>& vars, unsigned n) {
  std::vector<Polynomial> out;
  if (vars.empty()) return out;
  Monomial m(sig->arity());
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == vars.size()) {
      m.set(vars[pos], left);
      out.push_back(Polynomial::monomial(sig, m, 1));
      m.set(vars[pos], 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(vars[pos], e);
      self(self, pos + 1, left - e);
    }
    m.set(vars[pos], 0);
  };
  rec(rec, 0, n);
  return out;
}

Ideal power_of(const Ideal& a, unsigned n) {
  if (auto vars = variable_generators(a)) {
    if (n == 0) return Ideal::unit(a.signature_ptr());
    return Ideal(a.signature_ptr(), monomial_power(a.signature_ptr(), *vars, n));
  }
  return ideal_power(a, n);
}

}  // namespace

std::string method_name(MultiplicityCertificate::Method m) {
  return m == MultiplicityCertificate::Method::exact_hilbert_series ? "exact-hilbert-series" : "finite-difference";
}

void require_origin_support(const Ideal& ideal, const Ideal& a, const GbConfig& config) {
  if (!same_ring(ideal.signature_ptr(), a.signature_ptr()))
    throw PreconditionError("signature-mismatch", "ideal and filtration ideal live in different rings");
  Ideal sum = ideal_sum(ideal, a);
  if (!colength(sum, config))
    throw PreconditionError("support-not-origin", ideal.to_string() + " + " + a.to_string() + " has infinite colength");
  const auto& sig = ideal.signature_ptr();
  for (std::size_t v = 0; v < sig->arity(); ++v)
    if (!radical_membership(Polynomial::variable(sig, v), sum, config))
      throw PreconditionError("support-not-origin", ideal.to_string() + " + " + a.to_string() +
                                                        " vanishes away from the origin (" + sig->variable(v) +
                                                        " is not in the radical)");
}

std::vector<std::uint64_t> hs_maximal(const Ideal& ideal, unsigned bound, const GbConfig& config) {
  const std::size_t n = ideal.signature().arity();
  auto leads = truncated_local_leads(ideal.signature_ptr(), ideal.generators(), bound, config);
  std::vector<std::uint64_t> out(bound + 1, 0);
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); })) return out;
  HilbertSeries series = monomial_hilbert_series(leads, n);
  std::uint64_t acc = 0;
  for (unsigned k = 1; k <= bound; ++k) {
    acc += static_cast<std::uint64_t>(series.coefficient(k - 1));
    out[k] = acc;
  }
  return out;
}

std::uint64_t hs_function(const Ideal& ideal, const Ideal& a, unsigned n, const SamuelConfig& config) {
  require_origin_support(ideal, a, config.gb);
  if (n == 0) return 0;
  if (is_maximal(a)) return hs_maximal(ideal, n, config.gb).back();
  return *colength(ideal_sum(ideal, power_of(a, n)), config.gb);
}

std::int64_t backward_difference(const std::vector<std::uint64_t>& values, unsigned n, unsigned d) {
  // sum_k (-1)^k C(d, k) f(n - k)
  std::int64_t total = 0;
  std::int64_t binom = 1;
  for (unsigned k = 0; k <= d; ++k) {
    std::int64_t term = binom * static_cast<std::int64_t>(values.at(n - k));
    total += (k % 2) ? -term : term;
    binom = binom * (d - k) / (k + 1);
  }
  return total;
}

MultiplicityCertificate multiplicity_wrt(const Ideal& ideal, const Ideal& a, unsigned d, const SamuelConfig& config) {
  require_origin_support(ideal, a, config.gb);
  const unsigned max_n = config.max_n;
  const unsigned window = std::max(1u, config.window);
  if (max_n < d + window)
    throw BudgetError("not-stabilized", "sample range 1.." + std::to_string(max_n) + " is too short for a " +
                                            std::to_string(d) + "-th difference window of width " +
                                            std::to_string(window));

  std::vector<std::uint64_t> values(max_n + 1, 0);
  if (is_maximal(a)) {
    values = hs_maximal(ideal, max_n, config.gb);
  } else {
    for (unsigned n = 1; n <= max_n; ++n) {
      values[n] = *colength(ideal_sum(ideal, power_of(a, n)), config.gb);
      // I + a^n = I + a^(n+1) forces every later value to agree.
      if (n >= 2 && values[n] == values[n - 1]) {
        std::fill(values.begin() + n, values.end(), values[n]);
        break;
      }
    }
  }

  MultiplicityCertificate cert;
  cert.method = MultiplicityCertificate::Method::finite_difference;
  cert.dimension = d;
  cert.samples.assign(values.begin() + 1, values.end());
  cert.window_start = max_n - window + 1;
  cert.window_width = window;
  for (unsigned n = cert.window_start; n <= max_n; ++n) cert.differences.push_back(backward_difference(values, n, d));
  bool stable = std::all_of(cert.differences.begin(), cert.differences.end(),
                            [&](std::int64_t v) { return v == cert.differences.front(); });
  if (!stable || cert.differences.front() < 0) {
    std::string seen;
    for (auto v : cert.differences) seen += (seen.empty() ? "" : ", ") + std::to_string(v);
    throw BudgetError("not-stabilized", "difference of order " + std::to_string(d) + " did not stabilize by n = " +
                                            std::to_string(max_n) + " (last values " + seen + ")");
  }
  cert.value = cert.differences.front();
  return cert;
}

}  // namespace locmult
