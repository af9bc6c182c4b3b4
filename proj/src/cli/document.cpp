#include "cli/document.hpp"

#include <algorithm>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

}  // namespace

const Ideal* SourceDocument::find_ideal(const std::string& name) const {
  for (const auto& d : ideals)
    if (d.name == name) return &d.ideal;
  return nullptr;
}

const ClaimDecl* SourceDocument::find_claim(const std::string& name) const {
  for (const auto& c : claims)
    if (c.name == name) return &c;
  return nullptr;
}

bool SourceDocument::is_equidim(const std::string& name) const {
  return std::find(equidim.begin(), equidim.end(), name) != equidim.end();
}

const Ideal& resolve_ideal(const SourceDocument& doc, const std::string& name) {
  const Ideal* i = doc.find_ideal(name);
  if (!i) throw UsageError("unknown-name", "no ideal named " + name);
  return *i;
}

Ideal resolve(const SourceDocument& doc, const IdealExpr& expr) {
  std::vector<Polynomial> gens;
  for (const auto& part : expr.parts) {
    if (const auto* name = std::get_if<std::string>(&part)) {
      const auto& g = resolve_ideal(doc, *name).generators();
      gens.insert(gens.end(), g.begin(), g.end());
    } else {
      const auto& g = std::get<std::vector<Polynomial>>(part);
      gens.insert(gens.end(), g.begin(), g.end());
    }
  }
  return Ideal(doc.ring, std::move(gens));
}

std::string format_ideal_expr(const IdealExpr& expr) {
  std::string s;
  for (std::size_t i = 0; i < expr.parts.size(); ++i) {
    if (i) s += " + ";
    if (const auto* name = std::get_if<std::string>(&expr.parts[i]))
      s += *name;
    else
      s += "(" + join_polys(std::get<std::vector<Polynomial>>(expr.parts[i])) + ")";
  }
  return s;
}

std::string format_directive(const Directive& d) {
  std::string s = (d.kind == Directive::Kind::expect ? "expect " : "check ") + d.name + "(";
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i) s += ", ";
    const auto& a = d.args[i];
    if (const auto* e = std::get_if<IdealExpr>(&a))
      s += format_ideal_expr(*e);
    else if (const auto* p = std::get_if<Polynomial>(&a))
      s += p->to_string();
    else if (const auto* n = std::get_if<std::int64_t>(&a))
      s += std::to_string(*n);
    else
      s += std::get<std::string>(a);
  }
  s += ")";
  if (d.kind == Directive::Kind::expect) {
    s += " = ";
    if (const auto* n = std::get_if<std::int64_t>(&d.value))
      s += std::to_string(*n);
    else if (const auto* w = std::get_if<std::string>(&d.value))
      s += *w;
    else if (const auto* g = std::get_if<std::vector<Polynomial>>(&d.value))
      s += "(" + join_polys(*g) + ")";
  }
  if (!d.tag.empty()) s += " [" + d.tag + "]";
  return s;
}

std::string pretty_print(const SourceDocument& doc) {
  std::string out;
  if (!doc.suites.empty()) {
    out += "suite ";
    for (std::size_t i = 0; i < doc.suites.size(); ++i) out += (i ? ", " : "") + doc.suites[i];
    out += "\n";
  }
  if (doc.ring) out += "ring " + doc.ring->to_string() + "\n";
  for (const auto& d : doc.ideals)
    out += "ideal " + d.name + " = " + (d.ideal.is_zero() ? "0" : join_polys(d.ideal.generators())) + "\n";
  for (const auto& c : doc.claims) {
    out += "claim " + c.name + " = ";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      out += (i ? ", " : "") + c.parts[i].first;
      if (c.parts[i].second != 1) out += " * " + std::to_string(c.parts[i].second);
    }
    out += "\n";
  }
  if (!doc.equidim.empty()) {
    out += "equidim ";
    for (std::size_t i = 0; i < doc.equidim.size(); ++i) out += (i ? ", " : "") + doc.equidim[i];
    out += "\n";
  }
  for (const auto& d : doc.directives) out += format_directive(d) + "\n";
  return out;
}

bool operator==(const SourceDocument& a, const SourceDocument& b) {
  if (!a.ring != !b.ring || (a.ring && !(*a.ring == *b.ring))) return false;
  if (a.ideals.size() != b.ideals.size() || a.claims.size() != b.claims.size() ||
      a.directives.size() != b.directives.size())
    return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i)
    if (a.ideals[i].name != b.ideals[i].name || a.ideals[i].ideal.generators() != b.ideals[i].ideal.generators())
      return false;
  for (std::size_t i = 0; i < a.claims.size(); ++i)
    if (a.claims[i].name != b.claims[i].name || a.claims[i].parts != b.claims[i].parts) return false;
  for (std::size_t i = 0; i < a.directives.size(); ++i)
    if (format_directive(a.directives[i]) != format_directive(b.directives[i])) return false;
  return a.equidim == b.equidim && a.suites == b.suites;
}

}  // namespace locmult
