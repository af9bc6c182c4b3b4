#include "cli/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "cli/parser.hpp"
#include "polyalg/errors.hpp"

namespace locmult {

namespace detail {
extern const char* const kCorpusNames[];
extern const char* const kCorpusTexts[];
extern const std::size_t kCorpusCount;
}  // namespace detail

const std::vector<FixtureSource>& embedded_corpus() {
  static const std::vector<FixtureSource> corpus = [] {
    std::vector<FixtureSource> c;
    for (std::size_t i = 0; i < detail::kCorpusCount; ++i)
      c.push_back({detail::kCorpusNames[i], detail::kCorpusTexts[i]});
    std::sort(c.begin(), c.end(), [](const FixtureSource& a, const FixtureSource& b) { return a.name < b.name; });
    return c;
  }();
  return corpus;
}

namespace {

struct Evaluator {
  const SourceDocument& doc;
  const LocalConfig& config;

  Ideal ideal(const Directive& d, std::size_t i) const { return resolve(doc, std::get<IdealExpr>(d.args.at(i))); }
  const Polynomial& poly(const Directive& d, std::size_t i) const { return std::get<Polynomial>(d.args.at(i)); }
  std::int64_t integer(const Directive& d, std::size_t i) const { return std::get<std::int64_t>(d.args.at(i)); }

  bool equidim(const Directive& d, std::size_t i) const {
    const auto& e = std::get<IdealExpr>(d.args.at(i));
    if (e.parts.size() != 1) return false;
    const auto* name = std::get_if<std::string>(&e.parts.front());
    return name && doc.is_equidim(*name);
  }

  // Actual value of an expect quantity, rendered as text.
  std::string quantity(const Directive& d) const {
    const std::string& q = d.name;
    if (q == "mult") return std::to_string(multiplicity(ideal(d, 0), config.cone()).value);
    if (q == "dim") return std::to_string(local_dim(ideal(d, 0), config.cone()));
    if (q == "colength") {
      auto c = colength(ideal(d, 0), config.gb);
      return c ? std::to_string(*c) : "infinite";
    }
    if (q == "tangent") return tangent_cone(ideal(d, 0), config.cone()).ideal.to_string();
    if (q == "hs") {
      Ideal i = ideal(d, 0);
      return std::to_string(
          hs_function(i, Ideal::of_variables(i.signature_ptr()), static_cast<unsigned>(integer(d, 1)), config.samuel()));
    }
    if (q == "mult_wrt")
      return std::to_string(
          multiplicity_wrt(ideal(d, 0), ideal(d, 1), static_cast<unsigned>(integer(d, 2)), config.samuel()).value);
    if (q == "chi") return std::to_string(chi(ideal(d, 0), ideal(d, 1), config).value);
    if (q == "excess") return std::to_string(excess(ideal(d, 0), ideal(d, 1), config));
    if (q == "tangent_dim") return std::to_string(tangent_tensor_dim(ideal(d, 0), ideal(d, 1), config));
    if (q == "e_tensor") {
      Ideal i = ideal(d, 0), j = ideal(d, 1);
      Ideal t = i.signature().uniformizer() ? tensor_over_dvr(i, j) : tensor_over_field(i, j);
      return std::to_string(multiplicity(t, config.cone()).value);
    }
    if (q == "flat") return flatness_over_uniformizer(ideal(d, 0), config.gb) ? "true" : "false";
    if (q == "contains") return contains(ideal(d, 0), poly(d, 1), config.gb) ? "true" : "false";
    if (q == "radical") return radical_membership(poly(d, 1), ideal(d, 0), config.gb) ? "true" : "false";
    throw UsageError("unknown-quantity", "unknown quantity " + q);
  }

  bool matches(const Directive& d, const std::string& actual) const {
    if (const auto* n = std::get_if<std::int64_t>(&d.value)) return actual == std::to_string(*n);
    if (const auto* w = std::get_if<std::string>(&d.value)) return actual == *w;
    if (const auto* g = std::get_if<std::vector<Polynomial>>(&d.value)) {
      Ideal expected(doc.ring, *g);
      return ideal_equal(tangent_cone(ideal(d, 0), config.cone()).ideal, expected, config.gb);
    }
    return false;
  }

  // Runs a check; returns (ok, summary).
  std::pair<bool, std::string> property(const Directive& d) const {
    const std::string& p = d.name;
    if (p == "tangent") {
      Ideal i = ideal(d, 0);
      TangentCone cone = tangent_cone(i, config.cone());
      auto fd = multiplicity_wrt(i, Ideal::of_variables(i.signature_ptr()), cone.dimension, config.samuel());
      std::int64_t exact = cone.series.multiplicity();
      return {exact == fd.value, "e exact " + std::to_string(exact) + ", finite-difference " + std::to_string(fd.value) +
                                     ", certificate degrees 0.." + std::to_string(config.certificate_degree)};
    }
    if (p == "confluent") {
      Ideal i = ideal(d, 0);
      bool ok = true;
      for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        auto gb = i.basis(order, config.gb);
        ok = ok && s_pairs_confluent(*gb) && ideal_equal(i, Ideal(i.signature_ptr(), gb->elements()), config.gb);
      }
      return {ok, ok ? "grevlex and lex bases confluent" : "basis check failed"};
    }
    if (p == "theoremA") {
      ChiReport r = serre_report(ideal(d, 0), ideal(d, 1), false, config);
      return {r.flags.complementary && r.verdicts.theorem_A == Verdict::holds,
              "chi " + std::to_string(r.chi) + ", e_M e_N " + std::to_string(r.e_M.value * r.e_N.value) +
                  ", excess " + std::to_string(r.excess)};
    }
    if (p == "vanishing") {
      Ideal i = ideal(d, 0), j = ideal(d, 1);
      unsigned dm = local_dim(i, config.cone()), dn = local_dim(j, config.cone());
      std::int64_t c = chi(i, j, config).value;
      const unsigned da = static_cast<unsigned>(i.signature().arity());
      bool ok = dm + dn < da ? c == 0 : (dm + dn == da ? c >= 1 : false);
      return {ok, "dims " + std::to_string(dm) + " + " + std::to_string(dn) + " in " + std::to_string(da) + ", chi " +
                      std::to_string(c)};
    }
    if (p == "dvr") {
      Ideal i = ideal(d, 0), j = ideal(d, 1);
      if (!i.signature().uniformizer()) throw PreconditionError("no-uniformizer", "dvr check needs a uniformizer");
      if (!flatness_over_uniformizer(i, config.gb) || !flatness_over_uniformizer(j, config.gb))
        return {false, "pair is not flat over the uniformizer"};
      Polynomial t = Polynomial::variable(i.signature_ptr(), *i.signature().uniformizer());
      const std::int64_t e_m = multiplicity(i, config.cone()).value, e_n = multiplicity(j, config.cone()).value;
      const std::int64_t e_m_t = multiplicity(with_generator(i, t), config.cone()).value;
      const std::int64_t e_n_t = multiplicity(with_generator(j, t), config.cone()).value;
      const std::int64_t e_tensor = multiplicity(tensor_over_dvr(i, j), config.cone()).value;
      DimcutCheck cut = dimcut_check(i, j, config);
      PsiDefect psi = psi_defect(i, j, config);
      const unsigned dim_m = local_dim(i, config.cone()), dim_n = local_dim(j, config.cone());
      const std::int64_t product = e_m * e_n;
      const bool lower = e_tensor >= product;
      const bool criterion = (e_tensor == product) == (e_m == e_m_t || e_n == e_n_t);
      const bool dim_law = cut.rhs_dim + 1 == dim_m + dim_n;
      bool ok = lower && criterion && cut.consistent && psi.containment && dim_law;
      return {ok, "e_tensor " + std::to_string(e_tensor) + ", e_M e_N " + std::to_string(product) + ", e(M/tM) " +
                      std::to_string(e_m_t) + ", e(N/tN) " + std::to_string(e_n_t) + ", dims " +
                      std::to_string(cut.lhs_dim) + "/" + std::to_string(cut.rhs_dim) +
                      (cut.consistent ? ", dimcut consistent" : ", dimcut inconsistent") +
                      (psi.containment ? "" : ", psi containment fails") + (dim_law ? "" : ", dimension law fails")};
    }
    if (p == "samuel") {
      SamuelCheck s = samuel_check(ideal(d, 0), ideal(d, 1), config);
      std::int64_t total = 0;
      for (auto v : s.tensor_hf) total += v;
      return {s.ideal_match && s.convolution_match,
              std::string("ideal ") + (s.ideal_match ? "match" : "mismatch") + ", convolution " +
                  (s.convolution_match ? "match" : "mismatch") + ", total through degree 15 " + std::to_string(total)};
    }
    if (p == "conjI") {
      bool eq = equidim(d, 0) && equidim(d, 1);
      ChiReport r = serre_report(ideal(d, 0), ideal(d, 1), eq, config);
      bool candidate = std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [](const std::string& s) {
        return s.rfind("counterexample-candidate", 0) == 0;
      });
      bool ok = !candidate && r.verdicts.tennison != Verdict::fails &&
                (!eq || !r.flags.complementary || r.verdicts.conjecture_I == Verdict::holds);
      std::string summary = "excess " + std::to_string(r.excess) + ", tangent_dim " + std::to_string(r.tangent_dim) +
                            ", conjecture I " + verdict_name(r.verdicts.conjecture_I);
      if (candidate) summary += ", counterexample-candidate";
      return {ok, summary};
    }
    if (p == "symmetric") {
      std::int64_t a = chi(ideal(d, 0), ideal(d, 1), config).value;
      std::int64_t b = chi(ideal(d, 1), ideal(d, 0), config).value;
      return {a == b, "chi " + std::to_string(a) + " / " + std::to_string(b)};
    }
    if (p == "divisor") {
      DivisorCheck c =
          mod_divisor_check(ideal(d, 0), poly(d, 1), static_cast<unsigned>(integer(d, 2)), config.cone());
      return {c.consistent, "lhs " + std::to_string(c.lhs) + ", rhs " + std::to_string(c.rhs) +
                                (c.dim_dropped ? ", dimension dropped" : ", dimension kept")};
    }
    if (p == "additivity") {
      const ClaimDecl* claim = doc.find_claim(std::get<std::string>(d.args.at(1)));
      DecompositionClaim dc;
      for (const auto& [name, m] : claim->parts) dc.components.emplace_back(resolve_ideal(doc, name), m);
      AdditivityCheck a = additivity_check(ideal(d, 0), dc, config.cone());
      return {a.match, "e " + std::to_string(a.e_total) + ", claimed " + std::to_string(a.e_sum)};
    }
    throw UsageError("unknown-property", "unknown property " + p);
  }
};

}  // namespace

FixtureOutcome evaluate_fixture(const std::string& name, std::string_view text, const LocalConfig& config) {
  FixtureOutcome out;
  out.name = name;
  SourceDocument doc;
  try {
    doc = parse_source(text);
  } catch (const Error& e) {
    out.error = e.what();
    return out;
  }
  out.suites = doc.suites;
  Evaluator ev{doc, config};
  out.passed = true;
  for (const auto& d : doc.directives) {
    DirectiveOutcome r;
    r.directive = format_directive(d);
    r.tag = d.tag;
    try {
      if (d.kind == Directive::Kind::expect) {
        r.actual = ev.quantity(d);
        r.ok = ev.matches(d, r.actual);
      } else {
        auto [ok, summary] = ev.property(d);
        r.ok = ok;
        r.actual = summary;
      }
    } catch (const Error& e) {
      r.ok = false;
      r.error = e.what();
    }
    if (r.tag.empty()) {
      r.ok = false;
      r.error = "missing provenance tag";
    }
    out.passed = out.passed && r.ok;
    out.results.push_back(std::move(r));
  }
  return out;
}

std::vector<FixtureOutcome> run_corpus(const std::string& suite, const LocalConfig& config, unsigned threads) {
  std::vector<const FixtureSource*> selected;
  const bool everything = suite.empty() || suite == "all" || suite == "paper";
  for (const auto& f : embedded_corpus()) {
    if (everything) {
      selected.push_back(&f);
      continue;
    }
    // Suites are declared in the fixture; a cheap parse finds them.
    SourceDocument doc;
    try {
      doc = parse_source(f.text);
    } catch (const Error&) {
      selected.push_back(&f);
      continue;
    }
    if (std::find(doc.suites.begin(), doc.suites.end(), suite) != doc.suites.end()) selected.push_back(&f);
  }
  if (selected.empty()) throw UsageError("unknown-suite", "no fixtures in suite " + suite);

  std::vector<FixtureOutcome> results(selected.size());
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < selected.size(); k = next++)
      results[k] = evaluate_fixture(selected[k]->name, selected[k]->text, config);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

Json fixture_json(const FixtureOutcome& o) {
  Json j;
  j["fixture"] = o.name;
  j["suites"] = o.suites;
  j["passed"] = o.passed;
  if (!o.error.empty()) j["error"] = o.error;
  Json rs = Json::array();
  for (const auto& r : o.results) {
    Json x;
    x["directive"] = r.directive;
    x["tag"] = r.tag;
    x["ok"] = r.ok;
    if (r.error.empty())
      x["actual"] = r.actual;
    else
      x["error"] = r.error;
    rs.push_back(std::move(x));
  }
  j["results"] = rs;
  return j;
}

void append_ledger(const std::string& path, const std::vector<FixtureOutcome>& outcomes) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::ofstream out(path, std::ios::app);
  if (!out) throw UsageError("ledger", "cannot open ledger " + path);
  for (const auto& o : outcomes) out << fixture_json(o).dump() << "\n";
  if (!out) throw UsageError("ledger", "cannot write ledger " + path);
}

CommandOutput corpus_command(const std::string& suite, const std::string& ledger, const CommandOptions& options) {
  const std::string chosen = suite.empty() ? "all" : suite;
  auto outcomes = run_corpus(chosen, options.local());
  if (!ledger.empty()) append_ledger(ledger, outcomes);

  CommandOutput out;
  out.document["command"] = "corpus";
  out.document["arguments"] = Json::array({chosen});
  out.document["version"] = LOCMULT_VERSION;
  Json fixtures = Json::array();
  std::size_t passed = 0, directives = 0, failed_directives = 0;
  std::string& s = out.text;
  for (const auto& o : outcomes) {
    fixtures.push_back(fixture_json(o));
    if (o.passed) ++passed;
    std::size_t ok = 0;
    for (const auto& r : o.results) ok += r.ok;
    directives += o.results.size();
    failed_directives += o.results.size() - ok;
    char line[160];
    std::snprintf(line, sizeof line, "%-36s %-4s %zu/%zu\n", o.name.c_str(), o.passed ? "ok" : "FAIL", ok,
                  o.results.size());
    s += line;
    if (!o.error.empty()) s += "    error: " + o.error + "\n";
    for (const auto& r : o.results)
      if (!r.ok) s += "    failed: " + r.directive + (r.error.empty() ? " -> " + r.actual : " -> " + r.error) + "\n";
  }
  s += "fixtures: " + std::to_string(passed) + "/" + std::to_string(outcomes.size()) + " passed, directives: " +
       std::to_string(directives - failed_directives) + "/" + std::to_string(directives) + " passed\n";
  Json summary;
  summary["fixtures"] = outcomes.size();
  summary["fixtures_passed"] = passed;
  summary["directives"] = directives;
  summary["directives_failed"] = failed_directives;
  out.document["result"] = Json{{"suite", chosen}, {"summary", summary}, {"fixtures", fixtures}};
  out.failed = passed != outcomes.size();
  return out;
}

}  // namespace locmult
