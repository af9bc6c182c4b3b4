// Command-line front end; every computation goes through the C API.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locmult/locmult.h"

namespace {

struct Invocation {
  std::string command;
  std::string file;
  std::vector<std::string> args;
};

bool read_source(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

// Results go to stdout, errors to stderr.
int finish(lm_status status, char* out, bool result) {
  if (out) {
    std::FILE* stream = result ? stdout : stderr;
    if (!result) std::fputs("error: ", stream);
    std::fputs(out, stream);
    std::size_t n = std::strlen(out);
    if (n && out[n - 1] != '\n') std::fputc('\n', stream);
  }
  lm_string_free(out);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local multiplicities, tangent cones and intersection multiplicities at the origin", "locmult"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lm_version()));

  lm_options opts;
  lm_options_init(&opts);
  bool json = false, timing = false, equidim = false;
  std::string order = "grevlex";
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--max-degree", opts.max_degree, "S-pair degree cap")->capture_default_str();
  app.add_option("--max-n", opts.max_n, "Hilbert-Samuel sample range 1..N")->capture_default_str();
  app.add_option("--window", opts.window, "Number of equal trailing differences required")->capture_default_str();
  app.add_flag("--timing", timing, "Include wall time in the output");

  Invocation inv;
  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> params;
  };
  const std::vector<Spec> specs{
      {"gb", "Reduced Groebner basis of an ideal", {"IDEAL"}},
      {"mult", "Hilbert-Samuel multiplicity at the origin", {"IDEAL"}},
      {"tangent", "Certified tangent cone", {"IDEAL"}},
      {"hs", "Hilbert-Samuel function values 1..N", {"IDEAL", "N"}},
      {"chi", "Intersection multiplicity via the diagonal", {"IDEAL", "IDEAL"}},
      {"report", "Intersection report with theorem verdicts", {"IDEAL", "IDEAL"}},
      {"samuel", "Tangent cone of the tensor product over the field", {"IDEAL", "IDEAL"}},
      {"psi", "Graded surjection check over the uniformizer", {"IDEAL", "IDEAL"}},
      {"dimcut", "Dimension against multiplicity criterion over the uniformizer", {"IDEAL", "IDEAL"}},
      {"divisor", "Multiplicity modulo a non-zerodivisor of order T", {"IDEAL", "POLY", "T"}},
      {"additivity", "Additivity over a claimed decomposition", {"IDEAL", "CLAIM"}},
      {"format", "Pretty-print a source file", {}},
  };
  std::vector<std::vector<std::string>> slots(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) {
    auto* sub = app.add_subcommand(specs[k].name, specs[k].help);
    sub->fallthrough();
    sub->add_option("file", inv.file, "Source file, or - for standard input")->required();
    std::string names;
    for (auto* p : specs[k].params) names += std::string(names.empty() ? "" : " ") + p;
    if (!specs[k].params.empty())
      sub->add_option("args", slots[k], names)->expected(static_cast<int>(specs[k].params.size()))->required();
    if (std::string(specs[k].name) == "gb")
      sub->add_option("--order", order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
    if (std::string(specs[k].name) == "report")
      sub->add_flag("--equidim", equidim, "Assert both modules are equidimensional");
    sub->callback([&inv, &slots, k, name = specs[k].name] {
      inv.command = name;
      inv.args = slots[k];
    });
  }

  std::string suite, ledger;
  auto* corpus = app.add_subcommand("corpus", "Run the built-in fixture corpus");
  corpus->fallthrough();
  corpus->add_option("--suite", suite, "Fixture suite (default: all)");
  corpus->add_option("--ledger", ledger, "Append one JSON line per fixture to this file");
  corpus->callback([&inv] { inv.command = "corpus"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LM_ERR_PARSE;
  }

  opts.json = json;
  opts.timing = timing;
  opts.equidim = equidim;
  opts.order = order.c_str();

  char* out = nullptr;
  if (inv.command == "corpus") {
    lm_status s = lm_cmd_corpus(suite.empty() ? nullptr : suite.c_str(), ledger.empty() ? nullptr : ledger.c_str(),
                                &opts, &out);
    // A failing fixture still produces the full summary.
    return finish(s, out, s == LM_OK || s == LM_ERR_MATH);
  }

  std::string text;
  if (!read_source(inv.file, text)) {
    std::fprintf(stderr, "error: cannot read %s\n", inv.file.c_str());
    return LM_ERR_PARSE;
  }
  lm_document* doc = nullptr;
  char* err = nullptr;
  lm_status s = lm_document_parse(text.data(), text.size(), &doc, &err);
  if (s != LM_OK) {
    std::fprintf(stderr, "%s:%s\n", inv.file.c_str(), err ? err : " parse error");
    lm_string_free(err);
    return s;
  }
  std::vector<const char*> args;
  for (const auto& a : inv.args) args.push_back(a.c_str());
  s = lm_cmd_run(doc, inv.command.c_str(), args.data(), args.size(), &opts, &out);
  lm_document_free(doc);
  return finish(s, out, s == LM_OK);
}
