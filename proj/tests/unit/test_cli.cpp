#include <doctest.h>

#include <algorithm>
#include <string>

#include "cli/commands.hpp"
#include "cli/corpus.hpp"
#include "cli/json_emit.hpp"
#include "cli/parser.hpp"
#include "oracles/generators.hpp"
#include "polyalg/errors.hpp"

using namespace locmult;

namespace {

std::string parse_error(const char* text) {
  try {
    parse_source(text);
  } catch (const ParseError& e) {
    return e.bare_message() + " @" + std::to_string(e.line()) + ":" + std::to_string(e.column());
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kPlaneAndAxis =
    "ring Q[x, y, z]\n"
    "ideal I = x*y - x^3, x*z\n"
    "ideal J = y, z\n";

CommandOutput run(const char* source, const std::string& command, std::vector<std::string> args,
                  CommandOptions options = {}) {
  return run_command(parse_source(source), command, args, options);
}

}  // namespace

TEST_CASE("parse a minimal document") {
  SourceDocument doc = parse_source("ring Q[t,x,y] uniformizer t\nideal I = t - x^2");
  REQUIRE(doc.ring);
  CHECK(doc.ring->arity() == 3);
  CHECK(doc.ring->uniformizer() == 0u);
  REQUIRE(doc.ideals.size() == 1);
  CHECK(doc.ideals[0].name == "I");
}

TEST_CASE("parse errors") {
  CHECK(parse_error("ideal I = x^2").rfind("no ring declared", 0) == 0);
  CHECK(parse_error("ring Q[x] \n ideal I = x + w") == "unknown variable w @2:16");
  CHECK(parse_error("ring Q[x]\nideal I = x\nideal I = x^2").rfind("duplicate name I", 0) == 0);
  CHECK(parse_error("ring Q[x, y]\nideal I = 2x").rfind("implicit multiplication is not allowed", 0) == 0);
  CHECK(parse_error("ring Q[x]\nring Q[y]").rfind("ring already declared", 0) == 0);
  CHECK(parse_error("ring F8[x]") != "");
  CHECK(parse_error("ring Q[x]\nideal I = x $ 1") != "");
  CHECK(parse_error("ring Q[x]\nideal I = (x + 1") != "");
}

TEST_CASE("grammar details") {
  SourceDocument doc = parse_source(
      "ring F7[x, y]; ideal I = (x + y)^2 - 3*x*y,\n  x^3  # continued\n"
      "ideal Z = 0\n"
      "equidim I\n"
      "claim C = I * 2, Z\n");
  CHECK(doc.ring->field().characteristic() == 7);
  CHECK(doc.find_ideal("I")->generators().size() == 2);
  CHECK(doc.find_ideal("Z")->is_zero());
  CHECK(doc.is_equidim("I"));
  REQUIRE(doc.find_claim("C"));
  CHECK(doc.find_claim("C")->parts[0].second == 2u);
  CHECK(parse_polynomial(doc.ring, "x/2").to_string() == "4*x");
  CHECK_THROWS(parse_polynomial(doc.ring, "x/0"));
}

TEST_CASE("pretty print round trip on the corpus") {
  for (const auto& fixture : embedded_corpus()) {
    SourceDocument doc = parse_source(fixture.text);
    std::string printed = pretty_print(doc);
    SourceDocument again = parse_source(printed);
    CHECK(again == doc);
    CHECK(pretty_print(again) == printed);
  }
}

TEST_CASE("pretty print round trip on random documents") {
  auto sig = RingSignature::make(Field::rationals(), {"t", "x", "y"}, std::string("t"));
  oracle::PolyGen gen(sig, 41);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text = "ring Q[t, x, y] uniformizer t\n";
    for (int k = 0; k < 3; ++k) {
      text += "ideal G" + std::to_string(k) + " = ";
      for (int g = 0; g < 2; ++g) text += (g ? ", " : "") + gen.polynomial(4, 4).to_string();
      text += "\n";
    }
    text += "expect mult(G0 + (t, x)) = 1 [DERIVED]\ncheck samuel(G1, G2) [TRIVIAL]\n";
    SourceDocument doc = parse_source(text);
    CHECK(parse_source(pretty_print(doc)) == doc);
  }
}

TEST_CASE("unknown names") {
  SourceDocument doc = parse_source(kPlaneAndAxis);
  CHECK_THROWS_AS(resolve_ideal(doc, "K"), UsageError);
  CHECK_THROWS_AS(run(kPlaneAndAxis, "chi", {"I", "K"}), UsageError);
  CHECK_THROWS_AS(run(kPlaneAndAxis, "nope", {"I"}), UsageError);
  CHECK_THROWS_AS(run(kPlaneAndAxis, "chi", {"I"}), UsageError);
}

TEST_CASE("chi and report commands") {
  CommandOutput chi = run(kPlaneAndAxis, "chi", {"I", "J"});
  CHECK(chi.document["result"]["chi"] == 1);
  CHECK(chi.text.find("chi: 1") != std::string::npos);

  CommandOutput report = run(kPlaneAndAxis, "report", {"I", "J"});
  const Json& r = report.document["result"];
  for (auto key : {"chi", "e_M", "e_N", "excess", "tangent_dim", "flags", "verdicts"}) CHECK(r.contains(key));
  CHECK(r["excess"] == 0);
  CHECK(r["tangent_dim"] == 1);
  CHECK(r["verdicts"]["conjecture_I"] == "caveat");
  CHECK(report.document["version"] == LOCMULT_VERSION);
  CHECK_FALSE(report.document.contains("timing_ms"));
}

TEST_CASE("mult command reports the method") {
  CommandOutput m = run("ring Q[t, x, y]\nideal T = t - x^2, t - y^2", "mult", {"T"});
  CHECK(m.document["result"]["value"] == 2);
  CHECK(m.document["result"]["method"] == "exact-hilbert-series");
  CHECK(m.text.find("e: 2") != std::string::npos);
  CHECK(m.text.find("method: exact-hilbert-series") != std::string::npos);
}

TEST_CASE("finite-difference certificates carry their window") {
  auto c = certificate_json(multiplicity_wrt(Ideal::zero(parse_source("ring Q[x]").ring),
                                             Ideal::of_variables(parse_source("ring Q[x]").ring), 1));
  CHECK(c["method"] == "finite-difference");
  CHECK(c["samples"].size() >= 3);
  CHECK(c.contains("window_start"));
}

TEST_CASE("json output is deterministic") {
  std::string a = emit_json(run(kPlaneAndAxis, "report", {"I", "J"}).document);
  std::string b = emit_json(run(kPlaneAndAxis, "report", {"I", "J"}).document);
  CHECK(a == b);
  CHECK(Json::parse(a)["result"]["chi"] == 1);
}

TEST_CASE("timing is opt-in") {
  CommandOptions options;
  options.timing = true;
  CHECK(run(kPlaneAndAxis, "mult", {"J"}, options).document.contains("timing_ms"));
}

TEST_CASE("gb order flag") {
  CommandOptions options;
  options.order = "lex";
  CommandOutput out = run("ring Q[x, y]\nideal I = x - y^2, y^3", "gb", {"I"}, options);
  CHECK(out.text.find("basis (lex)") != std::string::npos);
  options.order = "elim";
  CHECK_THROWS_AS(run("ring Q[x]\nideal I = x", "gb", {"I"}, options), UsageError);
}

TEST_CASE("corpus fixtures fail on mismatched values and missing tags") {
  FixtureOutcome wrong = evaluate_fixture("wrong", "ring Q[x, y]\nideal I = x^2\nexpect mult(I) = 3 [TRIVIAL]\n");
  CHECK_FALSE(wrong.passed);
  REQUIRE(wrong.results.size() == 1);
  CHECK(wrong.results[0].actual == "2");
  FixtureOutcome untagged = evaluate_fixture("untagged", "ring Q[x, y]\nideal I = x^2\nexpect mult(I) = 2\n");
  CHECK_FALSE(untagged.passed);
  FixtureOutcome right = evaluate_fixture("right", "ring Q[x, y]\nideal I = x^2\nexpect mult(I) = 2 [TRIVIAL]\n");
  CHECK(right.passed);
}

TEST_CASE("corpus suites select fixtures") {
  auto dvr = run_corpus("dvr");
  CHECK(dvr.size() >= 3);
  for (const auto& f : dvr) CHECK(std::find(f.suites.begin(), f.suites.end(), "dvr") != f.suites.end());
  CHECK_THROWS_AS(run_corpus("no-such-suite"), UsageError);
}
