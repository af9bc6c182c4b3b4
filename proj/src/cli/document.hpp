#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "groebner/ideal.hpp"

namespace locmult {

// Sum of named ideals and inline generator lists, e.g. `P + (t)`.
struct IdealExpr {
  std::vector<std::variant<std::string, std::vector<Polynomial>>> parts;
};

// One argument of an `expect` or `check` directive.
using DirectiveArg = std::variant<IdealExpr, Polynomial, std::int64_t, std::string>;

// `expect quantity(args) = value [TAG]` or `check property(args) [TAG]`.
struct Directive {
  enum class Kind { expect, check };
  Kind kind = Kind::expect;
  std::string name;
  std::vector<DirectiveArg> args;
  // expect only: an integer, `infinite`, `true`, `false`, or a generator list.
  std::variant<std::monostate, std::int64_t, std::string, std::vector<Polynomial>> value;
  std::string tag;
  std::size_t line = 0;
};

struct IdealDecl {
  std::string name;
  Ideal ideal;
};

struct ClaimDecl {
  std::string name;
  std::vector<std::pair<std::string, std::uint64_t>> parts;
};

struct SourceDocument {
  SignaturePtr ring;
  std::vector<IdealDecl> ideals;
  std::vector<ClaimDecl> claims;
  std::vector<std::string> equidim;
  std::vector<std::string> suites;
  std::vector<Directive> directives;

  const Ideal* find_ideal(const std::string& name) const;
  const ClaimDecl* find_claim(const std::string& name) const;
  bool is_equidim(const std::string& name) const;
};

// Throws UsageError("unknown-name") for names that are not declared ideals.
Ideal resolve(const SourceDocument& doc, const IdealExpr& expr);
const Ideal& resolve_ideal(const SourceDocument& doc, const std::string& name);

std::string format_ideal_expr(const IdealExpr& expr);
std::string format_directive(const Directive& d);
// Canonical source text; parsing it reproduces the document.
std::string pretty_print(const SourceDocument& doc);

bool operator==(const SourceDocument& a, const SourceDocument& b);

}  // namespace locmult
