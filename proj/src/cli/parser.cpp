#include "cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polyalg/errors.hpp"

namespace locmult {

namespace {

enum class Tok { ident, number, symbol, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool continues(const std::vector<Token>& out) {
  if (out.empty()) return false;
  const Token& last = out.back();
  if (last.kind != Tok::symbol) return false;
  static const std::set<std::string> ops{",", "+", "-", "*", "/", "^", "=", "(", "["};
  return ops.count(last.text) > 0;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n' || c == ';') {
      if (depth == 0 && !(c == '\n' && continues(out))) {
        if (out.empty() || out.back().kind != Tok::newline) out.push_back({Tok::newline, "", line, col});
      }
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        throw ParseError("implicit multiplication is not allowed", line, col + (j - i));
      out.push_back({Tok::number, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    static const std::string symbols = "+-*/^()[],=";
    if (symbols.find(c) == std::string::npos)
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    if (c == '(' || c == '[') ++depth;
    if ((c == ')' || c == ']') && depth > 0) --depth;
    out.push_back({Tok::symbol, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  void document(SourceDocument& doc) {
    doc_ = &doc;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::end) break;
      statement(doc);
      if (peek().kind != Tok::newline && peek().kind != Tok::end)
        fail("expected end of declaration, got '" + peek().text + "'");
    }
  }

  Polynomial single_polynomial(const SignaturePtr& ring) {
    ring_ = ring;
    skip_newlines();
    Polynomial p = polynomial();
    skip_newlines();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after polynomial");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek()); }
  [[noreturn]] static void fail_at(const std::string& msg, const Token& t) { throw ParseError(msg, t.line, t.column); }

  bool accept(const std::string& sym) {
    if (peek().kind == Tok::symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'" + (peek().kind == Tok::end ? "" : ", got '" + peek().text + "'"));
  }
  std::string identifier(const std::string& what) {
    if (peek().kind != Tok::ident) fail("expected " + what);
    return next().text;
  }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }

  void statement(SourceDocument& doc) {
    const Token& head = peek();
    if (head.kind != Tok::ident) fail("expected a declaration");
    const std::string kw = head.text;
    if (kw == "ring") {
      next();
      if (doc.ring) fail_at("ring already declared", head);
      doc.ring = ring_decl();
      ring_ = doc.ring;
      return;
    }
    if (kw != "ideal" && kw != "equidim" && kw != "claim" && kw != "suite" && kw != "expect" && kw != "check")
      fail("unknown declaration '" + kw + "'");
    if (kw == "suite") {
      next();
      do doc.suites.push_back(identifier("suite name"));
      while (accept(","));
      return;
    }
    if (!doc.ring) fail_at("no ring declared", head);
    next();
    if (kw == "ideal") {
      const Token& at = peek();
      std::string name = identifier("ideal name");
      if (names_.count(name)) fail_at("duplicate name " + name, at);
      expect("=");
      std::vector<Polynomial> gens;
      do gens.push_back(polynomial());
      while (accept(","));
      names_.insert(name);
      doc.ideals.push_back({name, Ideal(doc.ring, std::move(gens))});
    } else if (kw == "equidim") {
      do {
        const Token& at = peek();
        std::string name = identifier("ideal name");
        if (!doc.find_ideal(name)) fail_at("unknown ideal " + name, at);
        if (!doc.is_equidim(name)) doc.equidim.push_back(name);
      } while (accept(","));
    } else if (kw == "claim") {
      const Token& at = peek();
      ClaimDecl claim{identifier("claim name"), {}};
      if (names_.count(claim.name)) fail_at("duplicate name " + claim.name, at);
      expect("=");
      do {
        const Token& pt = peek();
        std::string prime = identifier("ideal name");
        if (!doc.find_ideal(prime)) fail_at("unknown ideal " + prime, pt);
        std::uint64_t m = 1;
        if (accept("*")) m = static_cast<std::uint64_t>(small_number());
        if (m == 0) fail_at("multiplicity must be positive", pt);
        claim.parts.emplace_back(prime, m);
      } while (accept(","));
      names_.insert(claim.name);
      doc.claims.push_back(std::move(claim));
    } else {
      doc.directives.push_back(directive(kw == "expect" ? Directive::Kind::expect : Directive::Kind::check, head));
    }
  }

  SignaturePtr ring_decl() {
    const Token& ft = peek();
    std::string fname = identifier("coefficient field");
    Field field = Field::rationals();
    if (fname == "Q") {
      field = Field::rationals();
    } else if (fname.size() > 1 && fname[0] == 'F' &&
               std::all_of(fname.begin() + 1, fname.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (fname.size() > 11) fail_at("field characteristic too large", ft);
      try {
        field = Field::prime(std::stoull(fname.substr(1)));
      } catch (const Error& e) {
        fail_at(e.what(), ft);
      }
    } else {
      fail_at("unknown field " + fname + " (expected Q or Fp)", ft);
    }
    expect("[");
    std::vector<std::string> vars;
    if (!accept("]")) {
      do {
        const Token& vt = peek();
        std::string v = identifier("variable name");
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) fail_at("duplicate variable " + v, vt);
        vars.push_back(v);
      } while (accept(","));
      expect("]");
    }
    std::optional<std::string> u;
    if (peek().kind == Tok::ident && peek().text == "uniformizer") {
      next();
      const Token& ut = peek();
      u = identifier("uniformizer variable");
      if (std::find(vars.begin(), vars.end(), *u) == vars.end()) fail_at("uniformizer " + *u + " is not a variable", ut);
    }
    try {
      return RingSignature::make(field, vars, u);
    } catch (const Error& e) {
      fail_at(e.what(), ft);
    }
  }

  std::int64_t small_number() {
    bool neg = accept("-");
    if (peek().kind != Tok::number) fail("expected an integer");
    const Token& t = next();
    if (t.text.size() > 18) fail_at("integer too large", t);
    std::int64_t v = std::stoll(t.text);
    return neg ? -v : v;
  }

  // Ideal expression: atom ('+' atom)*, atom = Name | '(' polys ')'.
  IdealExpr ideal_expr(const SourceDocument& doc) {
    IdealExpr e;
    do {
      if (accept("(")) {
        std::vector<Polynomial> gens;
        do gens.push_back(polynomial());
        while (accept(","));
        expect(")");
        e.parts.emplace_back(std::move(gens));
      } else {
        const Token& at = peek();
        std::string name = identifier("ideal name");
        if (!doc.find_ideal(name)) fail_at("unknown ideal " + name, at);
        e.parts.emplace_back(name);
      }
    } while (accept("+"));
    return e;
  }

  enum class ArgKind { ideal, poly, integer, claim };

  static const std::vector<ArgKind>* signature_of(Directive::Kind kind, const std::string& name) {
    using A = ArgKind;
    static const std::map<std::string, std::vector<ArgKind>> expects{
        {"mult", {A::ideal}},
        {"dim", {A::ideal}},
        {"colength", {A::ideal}},
        {"tangent", {A::ideal}},
        {"hs", {A::ideal, A::integer}},
        {"mult_wrt", {A::ideal, A::ideal, A::integer}},
        {"chi", {A::ideal, A::ideal}},
        {"excess", {A::ideal, A::ideal}},
        {"tangent_dim", {A::ideal, A::ideal}},
        {"e_tensor", {A::ideal, A::ideal}},
        {"flat", {A::ideal}},
        {"contains", {A::ideal, A::poly}},
        {"radical", {A::ideal, A::poly}},
    };
    static const std::map<std::string, std::vector<ArgKind>> checks{
        {"tangent", {A::ideal}},
        {"confluent", {A::ideal}},
        {"theoremA", {A::ideal, A::ideal}},
        {"vanishing", {A::ideal, A::ideal}},
        {"dvr", {A::ideal, A::ideal}},
        {"samuel", {A::ideal, A::ideal}},
        {"conjI", {A::ideal, A::ideal}},
        {"symmetric", {A::ideal, A::ideal}},
        {"divisor", {A::ideal, A::poly, A::integer}},
        {"additivity", {A::ideal, A::claim}},
    };
    const auto& table = kind == Directive::Kind::expect ? expects : checks;
    auto it = table.find(name);
    return it == table.end() ? nullptr : &it->second;
  }

  Directive directive(Directive::Kind kind, const Token& head) {
    Directive d;
    d.kind = kind;
    d.line = head.line;
    const Token& nt = peek();
    d.name = identifier(kind == Directive::Kind::expect ? "quantity" : "property");
    const auto* sig = signature_of(kind, d.name);
    if (!sig) fail_at(std::string("unknown ") + (kind == Directive::Kind::expect ? "quantity " : "property ") + d.name, nt);
    expect("(");
    for (std::size_t k = 0; k < sig->size(); ++k) {
      if (k) expect(",");
      switch ((*sig)[k]) {
        case ArgKind::ideal:
          d.args.emplace_back(ideal_expr(*doc_));
          break;
        case ArgKind::poly:
          d.args.emplace_back(polynomial());
          break;
        case ArgKind::integer:
          d.args.emplace_back(small_number());
          break;
        case ArgKind::claim: {
          const Token& ct = peek();
          std::string c = identifier("claim name");
          if (!doc_->find_claim(c)) fail_at("unknown claim " + c, ct);
          d.args.emplace_back(c);
          break;
        }
      }
    }
    expect(")");
    if (kind == Directive::Kind::expect) {
      expect("=");
      if (accept("(")) {
        std::vector<Polynomial> gens;
        if (!accept(")")) {
          do gens.push_back(polynomial());
          while (accept(","));
          expect(")");
        }
        d.value = std::move(gens);
      } else if (peek().kind == Tok::ident) {
        const Token& vt = next();
        if (vt.text != "infinite" && vt.text != "true" && vt.text != "false")
          fail_at("expected an integer, infinite, true, false or a generator list", vt);
        d.value = vt.text;
      } else {
        d.value = small_number();
      }
    }
    if (accept("[")) {
      d.tag = identifier("provenance tag");
      expect("]");
    }
    return d;
  }

  // polynomial := ['+'|'-'] term (('+'|'-') term)*
  Polynomial polynomial() {
    Polynomial acc(ring_);
    bool neg = false;
    if (accept("-"))
      neg = true;
    else
      accept("+");
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (accept("+"))
        acc = acc + term();
      else if (accept("-"))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept("*")) {
        acc = acc * factor();
      } else if (peek().kind == Tok::symbol && peek().text == "/") {
        const Token& at = next();
        Polynomial d = factor();
        if (d.is_zero()) fail_at("division by zero", at);
        if (total_degree(d) != 0u) fail_at("division by a non-constant", at);
        acc = scale(ring_->field().inv(d.constant_term()), acc);
      } else if (peek().kind == Tok::ident || peek().kind == Tok::number ||
                 (peek().kind == Tok::symbol && peek().text == "(")) {
        fail("implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept("^")) {
      if (peek().kind != Tok::number) fail("expected an exponent");
      const Token& et = next();
      if (et.text.size() > 5 || std::stoul(et.text) > kMaxExponent) fail_at("exponent too large", et);
      base = pow(base, static_cast<unsigned>(std::stoul(et.text)));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      return Polynomial::constant(ring_, Scalar(mpz_class(t.text)));
    }
    if (t.kind == Tok::ident) {
      next();
      auto idx = ring_->index_of(t.text);
      if (!idx) fail_at("unknown variable " + t.text, t);
      return Polynomial::variable(ring_, *idx);
    }
    if (accept("(")) {
      Polynomial p = polynomial();
      expect(")");
      return p;
    }
    if (accept("-")) return -factor();
    if (t.kind == Tok::end || t.kind == Tok::newline) fail("unexpected end of declaration");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SignaturePtr ring_;
  std::set<std::string> names_;
  const SourceDocument* doc_ = nullptr;
};

}  // namespace

SourceDocument parse_source(std::string_view text) {
  Parser p(lex(text));
  SourceDocument doc;
  p.document(doc);
  return doc;
}

Polynomial parse_polynomial(const SignaturePtr& ring, std::string_view text) {
  Parser p(lex(text));
  return p.single_polynomial(ring);
}

}  // namespace locmult
