// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cli/corpus.hpp"
#include "cli/parser.hpp"
#include "intersect/chi.hpp"
#include "intersect/comparisons.hpp"
#include "intersect/report.hpp"
#include "intersect/rings.hpp"
#include "localalg/hilbert_samuel.hpp"
#include "localalg/tangent_cone.hpp"
#include "locmult/locmult.h"
#include "oracles/macaulay.hpp"
#include "polyalg/errors.hpp"

using namespace locmult;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Pair {
  const SourceDocument* doc;
  std::string directive;
  IdealExpr a, b;
  Ideal i, j;
};

struct Corpus {
  std::vector<std::pair<std::string, SourceDocument>> docs;
  std::vector<Pair> pairs;

  Corpus() {
    for (const auto& f : embedded_corpus()) docs.emplace_back(f.name, parse_source(f.text));
    for (const auto& [name, doc] : docs)
      for (const auto& d : doc.directives) {
        if (d.args.size() < 2) continue;
        const auto* a = std::get_if<IdealExpr>(&d.args[0]);
        const auto* b = std::get_if<IdealExpr>(&d.args[1]);
        if (!a || !b) continue;
        pairs.push_back({&doc, d.name, *a, *b, resolve(doc, *a), resolve(doc, *b)});
      }
  }

  std::vector<const Pair*> with(const std::string& directive) const {
    std::vector<const Pair*> out;
    for (const auto& p : pairs)
      if (p.directive == directive) out.push_back(&p);
    return out;
  }

  // Declared ideals and every ideal expression used as an argument.
  std::vector<Ideal> ideals() const {
    std::vector<Ideal> out;
    std::set<std::string> seen;
    auto add = [&](const SourceDocument& doc, const Ideal& i) {
      if (seen.insert(doc.ring->to_string() + " " + i.to_string()).second) out.push_back(i);
    };
    for (const auto& [name, doc] : docs) {
      for (const auto& decl : doc.ideals) add(doc, decl.ideal);
      for (const auto& d : doc.directives)
        for (const auto& arg : d.args)
          if (const auto* e = std::get_if<IdealExpr>(&arg)) add(doc, resolve(doc, *e));
    }
    return out;
  }
};

const Corpus& corpus() {
  static Corpus c;
  return c;
}

bool equidim(const SourceDocument& doc, const IdealExpr& e) {
  if (e.parts.size() != 1) return false;
  const auto* n = std::get_if<std::string>(&e.parts.front());
  return n && doc.is_equidim(*n);
}

std::string label(const Pair& p) { return format_ideal_expr(p.a) + "/" + format_ideal_expr(p.b); }

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

Ideal ideal(const SignaturePtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(r, s));
  return Ideal(r, std::move(g));
}

Outcome parabolas_over_dvr() {
  auto r = RingSignature::make(Field::rationals(), {"t", "x"}, std::string("t"));
  Ideal m = ideal(r, {"t - x^2"});
  Ideal n = ideal(r, {"t - x^2"});
  std::int64_t em = multiplicity(m).value, en = multiplicity(n).value;
  std::int64_t et = multiplicity(tensor_over_dvr(m, n)).value;
  Outcome o{em == 1 && en == 1 && et == 2, ""};
  o.detail = "e(M) " + std::to_string(em) + ", e(N) " + std::to_string(en) + ", e(M (x)_R N) " + std::to_string(et);
  return o;
}

Outcome plane_and_parabola_against_axis() {
  auto r = RingSignature::make(Field::rationals(), {"x", "y", "z"});
  Ideal i = ideal(r, {"x*y - x^3", "x*z"});
  Ideal j = ideal(r, {"y", "z"});
  ChiReport rep = serre_report(i, j, false);
  bool flagged = rep.verdicts.conjecture_I == Verdict::caveat &&
                 std::any_of(rep.diagnostics.begin(), rep.diagnostics.end(),
                             [](const std::string& s) { return s.find("equidimensionality not asserted") != std::string::npos; });
  Outcome o{rep.chi == 1 && rep.e_M.value == 1 && rep.e_N.value == 1 && rep.excess == 0 && rep.tangent_dim == 1 &&
                flagged,
            ""};
  o.detail = "chi " + std::to_string(rep.chi) + ", e " + std::to_string(rep.e_M.value) + "," +
             std::to_string(rep.e_N.value) + ", excess " + std::to_string(rep.excess) + ", tangent_dim " +
             std::to_string(rep.tangent_dim) + (flagged ? ", equidim caveat flagged" : ", caveat missing");
  return o;
}

Outcome monomial_curve() {
  auto r4 = RingSignature::make(Field::rationals(), {"t", "x", "y", "z"});
  Ideal p4 = eliminate(ideal(r4, {"t - z^4", "x - z^5", "y - z^11"}), {3});
  Ideal p = drop_variables(p4, {3});
  const auto& r = p.signature_ptr();
  Outcome o;
  for (auto rel : {"t^4 - x*y", "x^3 - t*y", "x^4 - t^5", "y^2 - t^3*x^2"})
    if (!contains(p, parse_polynomial(r, rel))) fail(o, std::string("missing relation ") + rel);
  std::int64_t e = multiplicity(p).value;
  std::int64_t e_fd = multiplicity_wrt(p, Ideal::of_variables(r), 1).value;
  std::int64_t e_t = multiplicity_wrt(p, ideal(r, {"t"}), 1).value;
  std::int64_t e_cut = multiplicity(with_generator(p, parse_polynomial(r, "t"))).value;
  if (!(e == 4 && e_fd == 4 && e_t == 4 && e_cut == 4)) fail(o, "multiplicities disagree");
  o.detail = (o.ok ? "4 relations present, " : o.detail + "; ") + "e " + std::to_string(e) + ", finite-difference " +
             std::to_string(e_fd) + ", e_(t) " + std::to_string(e_t) + ", e(p+(t)) " + std::to_string(e_cut);
  return o;
}

Outcome theorem_a_and_vanishing() {
  Outcome o;
  int complementary = 0, flat = 0, torsion = 0, vanishing = 0;
  for (const Pair* p : corpus().with("theoremA")) {
    ChiReport rep = serre_report(p->i, p->j, false);
    if (!rep.flags.complementary) {
      fail(o, label(*p) + " not complementary");
      continue;
    }
    ++complementary;
    if (rep.excess < 0) fail(o, label(*p) + " excess " + std::to_string(rep.excess));
    if (rep.flags.M_flat_over_t) (*rep.flags.M_flat_over_t && *rep.flags.N_flat_over_t ? flat : torsion)++;
  }
  for (const Pair* p : corpus().with("vanishing")) {
    unsigned dm = local_dim(p->i), dn = local_dim(p->j);
    if (dm + dn >= p->i.signature().arity()) continue;
    ++vanishing;
    std::int64_t c = chi(p->i, p->j).value;
    if (c != 0) fail(o, label(*p) + " chi " + std::to_string(c));
  }
  if (complementary < 10) fail(o, "only " + std::to_string(complementary) + " complementary pairs");
  if (flat == 0 || torsion == 0) fail(o, "corpus does not mix flat and non-flat pairs");
  if (vanishing < 5) fail(o, "only " + std::to_string(vanishing) + " sub-complementary pairs");
  if (o.ok)
    o.detail = std::to_string(complementary) + " complementary pairs with excess >= 0 (" + std::to_string(flat) +
               " flat, " + std::to_string(torsion) + " with t-torsion), chi = 0 on " + std::to_string(vanishing) +
               " sub-complementary pairs";
  return o;
}

Outcome dvr_criteria() {
  Outcome o;
  int count = 0;
  for (const Pair* p : corpus().with("dvr")) {
    ++count;
    Polynomial t = Polynomial::variable(p->i.signature_ptr(), *p->i.signature().uniformizer());
    std::int64_t em = multiplicity(p->i).value, en = multiplicity(p->j).value;
    std::int64_t emt = multiplicity(with_generator(p->i, t)).value, ent = multiplicity(with_generator(p->j, t)).value;
    std::int64_t et = multiplicity(tensor_over_dvr(p->i, p->j)).value;
    if ((et == em * en) != (em == emt || en == ent)) fail(o, label(*p) + " equality criterion");
    if (et < em * en) fail(o, label(*p) + " lower bound");
    if (!dimcut_check(p->i, p->j).consistent) fail(o, label(*p) + " dimcut");
  }
  auto r = RingSignature::make(Field::rationals(), {"t", "x"}, std::string("t"));
  ChiReport strict = serre_report(ideal(r, {"t - x^2"}), ideal(r, {"t + x^2"}), false);
  if (strict.chi != 2 || strict.excess != 1) fail(o, "strict pair chi/excess");
  if (count < 8) fail(o, "only " + std::to_string(count) + " flat pairs");
  if (o.ok)
    o.detail = std::to_string(count) + " t-flat pairs satisfy the equality criterion and dimcut; (t-x^2),(t+x^2): chi " +
               std::to_string(strict.chi) + ", excess " + std::to_string(strict.excess);
  return o;
}

Outcome samuel_suite() {
  Outcome o;
  int count = 0;
  bool saw_six = false;
  for (const Pair* p : corpus().with("samuel")) {
    ++count;
    SamuelCheck s = samuel_check(p->i, p->j);
    if (!s.ideal_match || !s.convolution_match) fail(o, label(*p));
    std::int64_t total = 0;
    for (auto v : s.tensor_hf) total += v;
    if (p->i.signature().arity() == 1 && p->i.to_string() == "(x^2)" && p->j.to_string() == "(x^3)") saw_six = total == 6;
  }
  if (count < 10) fail(o, "only " + std::to_string(count) + " pairs");
  if (!saw_six) fail(o, "(x^2)/(x^3) total is not 6");
  if (o.ok) o.detail = std::to_string(count) + " field-mode pairs; (x^2) against (x^3) totals 6";
  return o;
}

Outcome tangent_certificates() {
  Outcome o;
  int count = 0;
  for (const Ideal& i : corpus().ideals()) {
    ++count;
    TangentCone cone = tangent_cone(i);
    if (!cone_certificate_holds(i, cone, 12)) fail(o, i.to_string() + " certificate");
    auto fd = multiplicity_wrt(i, Ideal::of_variables(i.signature_ptr()), cone.dimension);
    if (fd.value != cone.series.multiplicity()) fail(o, i.to_string() + " exact against finite differences");
  }
  if (o.ok) o.detail = std::to_string(count) + " corpus ideals certified through degree 12";
  return o;
}

Outcome kernel_oracles() {
  Outcome o;
  std::vector<Ideal> zero_dim;
  for (const Ideal& i : corpus().ideals()) zero_dim.push_back(i);
  for (const Pair& p : corpus().pairs)
    if (p.i.signature().arity() == p.j.signature().arity()) zero_dim.push_back(ideal_sum(p.i, p.j));
  int oracle_checked = 0, bases = 0, symmetric = 0;
  std::set<std::string> seen;
  for (const Ideal& i : zero_dim) {
    if (i.signature().arity() > 4) continue;
    auto c = colength(i);
    if (!c || *c > 60 || *c == 0) continue;
    if (!seen.insert(i.signature().to_string() + i.to_string()).second) continue;
    auto m = oracle::macaulay_colength(i.generators(), i.signature().arity());
    if (!m || *m != *c) fail(o, i.to_string() + " colength " + std::to_string(*c));
    ++oracle_checked;
  }
  for (const Ideal& i : corpus().ideals())
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      ++bases;
      if (!s_pairs_confluent(*i.basis(order))) fail(o, i.to_string() + " basis not confluent");
    }
  std::set<std::string> pairs_seen;
  for (const Pair& p : corpus().pairs) {
    if (p.directive == "samuel" || p.directive == "dvr" || p.directive == "e_tensor") continue;
    if (!pairs_seen.insert(p.doc->ring->to_string() + label(p)).second) continue;
    ++symmetric;
    if (chi(p.i, p.j).value != chi(p.j, p.i).value) fail(o, label(p) + " chi not symmetric");
  }
  if (o.ok)
    o.detail = std::to_string(oracle_checked) + " colengths match the Macaulay oracle, " + std::to_string(bases) +
               " bases confluent, chi symmetric on " + std::to_string(symmetric) + " pairs";
  return o;
}

Outcome conjecture_i() {
  Outcome o;
  int count = 0, candidates = 0;
  for (const Pair* p : corpus().with("conjI")) {
    if (!equidim(*p->doc, p->a) || !equidim(*p->doc, p->b)) continue;
    ChiReport rep = serre_report(p->i, p->j, true);
    if (!rep.flags.complementary) continue;
    ++count;
    for (const auto& d : rep.diagnostics)
      if (d.rfind("counterexample-candidate", 0) == 0) {
        ++candidates;
        fail(o, label(*p) + " " + d);
      }
    if ((rep.excess == 0) != (rep.tangent_dim == 0) && candidates == 0) fail(o, label(*p) + " silent violation");
  }
  if (count == 0) fail(o, "no equidimensional pairs");
  if (o.ok) o.detail = std::to_string(count) + " equidimensional pairs, 0 counterexample candidates";
  return o;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  auto dir = std::filesystem::temp_directory_path() / "locmult_acceptance";
  std::filesystem::create_directories(dir);
  auto a = dir / "ledger_a.jsonl", b = dir / "ledger_b.jsonl";
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  lm_options opts;
  lm_options_init(&opts);
  Outcome o;
  for (const auto& path : {a, b}) {
    char* out = nullptr;
    lm_status s = lm_cmd_corpus("all", path.string().c_str(), &opts, &out);
    lm_string_free(out);
    if (s != LM_OK) fail(o, std::string("corpus run returned ") + lm_status_name(s));
  }
  std::string la = read_file(a), lb = read_file(b);
  if (la.empty() || la != lb) fail(o, "ledgers differ");
  std::size_t lines = std::count(la.begin(), la.end(), '\n');
  if (o.ok) o.detail = "two corpus runs wrote identical ledgers (" + std::to_string(lines) + " lines)";
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "parabolas over k[[t]]", 1.0, parabolas_over_dvr},
      {2, "plane and parabola against an axis", 5.0, plane_and_parabola_against_axis},
      {3, "monomial curve 4,5,11", 10.0, monomial_curve},
      {4, "excess and vanishing suite", 0, theorem_a_and_vanishing},
      {5, "flat pairs over k[[t]]", 0, dvr_criteria},
      {6, "associated graded of tensor products", 0, samuel_suite},
      {7, "tangent cone certificates", 0, tangent_certificates},
      {8, "kernel oracles", 0, kernel_oracles},
      {9, "excess zero iff tangent cones meet only at the origin", 0, conjecture_i},
      {10, "corpus determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += "; took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
