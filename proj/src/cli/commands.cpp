#include "cli/commands.hpp"

#include <chrono>
#include <map>

#include "cli/parser.hpp"
#include "polyalg/errors.hpp"

namespace locmult {

LocalConfig CommandOptions::local() const {
  LocalConfig c;
  c.gb.max_degree = max_degree;
  c.max_n = max_n;
  c.window = window;
  c.certificate_degree = certificate_degree;
  return c;
}

namespace {

struct Context {
  const SourceDocument& doc;
  const std::vector<std::string>& args;
  const CommandOptions& options;
  LocalConfig config;
};

using Handler = void (*)(const Context&, CommandOutput&);

const Ideal& ideal_arg(const Context& c, std::size_t i) { return resolve_ideal(c.doc, c.args.at(i)); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string generator_lines(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += "  " + p.to_string() + "\n";
  if (ps.empty()) s += "  0\n";
  return s;
}

std::string certificate_text(const MultiplicityCertificate& m) {
  std::string s = "e: " + std::to_string(m.value) + "\ndimension: " + std::to_string(m.dimension) +
                  "\nmethod: " + method_name(m.method) + "\n";
  if (m.series) s += "hilbert series: " + m.series->to_string() + "\n";
  if (!m.differences.empty()) {
    s += "window: n = " + std::to_string(m.window_start) + ".." +
         std::to_string(m.window_start + m.window_width - 1) + ", differences";
    for (auto d : m.differences) s += " " + std::to_string(d);
    s += "\n";
  }
  return s;
}

void cmd_gb(const Context& c, CommandOutput& out) {
  const Ideal& ideal = ideal_arg(c, 0);
  MonomialOrder order = MonomialOrder::grevlex();
  if (c.options.order == "lex")
    order = MonomialOrder::lex();
  else if (c.options.order != "grevlex")
    throw UsageError("bad-order", "unknown order " + c.options.order + " (expected grevlex or lex)");
  auto gb = ideal.basis(order, c.config.gb);
  out.document["result"] = basis_json(*gb);
  out.text = "basis (" + c.options.order + "):\n" + generator_lines(gb->elements());
}

void cmd_mult(const Context& c, CommandOutput& out) {
  auto m = multiplicity(ideal_arg(c, 0), c.config.cone());
  out.document["result"] = certificate_json(m);
  out.text = certificate_text(m);
}

void cmd_tangent(const Context& c, CommandOutput& out) {
  auto cone = tangent_cone(ideal_arg(c, 0), c.config.cone());
  out.document["result"] = cone_json(cone);
  out.text = "tangent cone:\n" + generator_lines(cone.ideal.generators()) +
             "dimension: " + std::to_string(cone.dimension) + "\nhilbert series: " + cone.series.to_string() +
             "\ncertificate: degrees 0.." + std::to_string(c.config.certificate_degree) + " verified\n";
}

void cmd_hs(const Context& c, CommandOutput& out) {
  const Ideal& ideal = ideal_arg(c, 0);
  unsigned n = static_cast<unsigned>(std::stoul(c.args.at(1)));
  auto values = hs_maximal(ideal, n, c.config.gb);
  out.document["result"] = Json{{"values", values}};
  out.text = "hilbert-samuel:";
  for (unsigned k = 1; k <= n; ++k) out.text += " " + std::to_string(values[k]);
  out.text += "\n";
}

void cmd_chi(const Context& c, CommandOutput& out) {
  auto v = chi(ideal_arg(c, 0), ideal_arg(c, 1), c.config);
  out.document["result"] = Json{{"chi", v.value}, {"certificate", certificate_json(v.certificate)}};
  out.text = "chi: " + std::to_string(v.value) + "\n" + certificate_text(v.certificate);
}

void cmd_report(const Context& c, CommandOutput& out) {
  bool equidim = c.options.equidim || (c.doc.is_equidim(c.args.at(0)) && c.doc.is_equidim(c.args.at(1)));
  auto r = serre_report(ideal_arg(c, 0), ideal_arg(c, 1), equidim, c.config);
  out.document["result"] = report_json(r);
  std::string& s = out.text;
  s += "chi: " + std::to_string(r.chi) + "\n";
  s += "e_M: " + std::to_string(r.e_M.value) + "  e_N: " + std::to_string(r.e_N.value) +
       "  e_tensor (" + r.tensor_mode + "): " + std::to_string(r.e_tensor.value) + "\n";
  s += "dim_M: " + std::to_string(r.dim_M) + "  dim_N: " + std::to_string(r.dim_N) +
       "  dim_A: " + std::to_string(r.dim_A) + "\n";
  s += "excess: " + std::to_string(r.excess) + "\ntangent_dim: " + std::to_string(r.tangent_dim) + "\n";
  if (r.e_M_mod_t)
    s += "e(M/tM): " + std::to_string(*r.e_M_mod_t) + "  e(N/tN): " + std::to_string(*r.e_N_mod_t) + "\n";
  s += "complementary: " + yes_no(r.flags.complementary) + "  equidim asserted: " + yes_no(r.flags.equidim_asserted);
  if (r.flags.M_flat_over_t)
    s += "  M flat: " + yes_no(*r.flags.M_flat_over_t) + "  N flat: " + yes_no(*r.flags.N_flat_over_t);
  s += "\n";
  const auto& v = r.verdicts;
  s += "theorem A: " + verdict_name(v.theorem_A) + "\ntheorem B: " + verdict_name(v.theorem_B) +
       "\ntheorem C: " + verdict_name(v.theorem_C) + "\ntheorem D: " + verdict_name(v.theorem_D) +
       "\ntheorem E: " + verdict_name(v.theorem_E) + "\nconjecture I: " + verdict_name(v.conjecture_I) +
       "\ntennison: " + verdict_name(v.tennison) + "\n";
  for (const auto& d : r.diagnostics) s += "! " + d + "\n";
  for (const auto& n : r.notes) s += "note: " + n + "\n";
}

void cmd_samuel(const Context& c, CommandOutput& out) {
  auto r = samuel_check(ideal_arg(c, 0), ideal_arg(c, 1), c.config);
  out.document["result"] = samuel_json(r);
  out.text = "ideal match: " + yes_no(r.ideal_match) + "\nconvolution match: " + yes_no(r.convolution_match) + "\n";
}

void cmd_psi(const Context& c, CommandOutput& out) {
  auto r = psi_defect(ideal_arg(c, 0), ideal_arg(c, 1), c.config);
  out.document["result"] = psi_json(r);
  out.text = "containment: " + yes_no(r.containment) + "\nsource: dim " + std::to_string(r.dim_src) + ", e " +
             std::to_string(r.e_src) + "\ntarget: dim " + std::to_string(r.dim_tgt) + ", e " +
             std::to_string(r.e_tgt) + "\nhomeomorphic proxy: " + yes_no(r.homeomorphic_proxy) + "\n";
}

void cmd_dimcut(const Context& c, CommandOutput& out) {
  auto r = dimcut_check(ideal_arg(c, 0), ideal_arg(c, 1), c.config);
  out.document["result"] = dimcut_json(r);
  out.text = "dims: " + std::to_string(r.lhs_dim) + " vs " + std::to_string(r.rhs_dim) + "\nmultiplicities: " +
             std::to_string(r.e_tensor) + " vs " + std::to_string(r.e_product) + "\nconsistent: " +
             yes_no(r.consistent) + "\n";
}

void cmd_divisor(const Context& c, CommandOutput& out) {
  Polynomial x = parse_polynomial(c.doc.ring, c.args.at(1));
  unsigned t = static_cast<unsigned>(std::stoul(c.args.at(2)));
  auto r = mod_divisor_check(ideal_arg(c, 0), x, t, c.config.cone());
  out.document["result"] = divisor_json(r);
  out.text = "e(M/xM): " + std::to_string(r.lhs) + "\nt e(M): " + std::to_string(r.rhs) +
             "\ndimension dropped: " + yes_no(r.dim_dropped) + "\nconsistent: " + yes_no(r.consistent) + "\n";
}

void cmd_additivity(const Context& c, CommandOutput& out) {
  const ClaimDecl* claim = c.doc.find_claim(c.args.at(1));
  if (!claim) throw UsageError("unknown-name", "no claim named " + c.args.at(1));
  DecompositionClaim dc;
  for (const auto& [name, m] : claim->parts) dc.components.emplace_back(resolve_ideal(c.doc, name), m);
  auto r = additivity_check(ideal_arg(c, 0), dc, c.config.cone());
  out.document["result"] = additivity_json(r);
  out.text = "e total: " + std::to_string(r.e_total) + "\ne sum: " + std::to_string(r.e_sum) +
             "\nmatch: " + yes_no(r.match) + "\n";
}

void cmd_format(const Context& c, CommandOutput& out) {
  out.text = pretty_print(c.doc);
  out.document["result"] = Json{{"source", out.text}};
}

struct CommandSpec {
  Handler handler;
  std::size_t arity;
  const char* usage;
};

const std::map<std::string, CommandSpec>& table() {
  static const std::map<std::string, CommandSpec> t{
      {"gb", {cmd_gb, 1, "gb IDEAL"}},
      {"mult", {cmd_mult, 1, "mult IDEAL"}},
      {"tangent", {cmd_tangent, 1, "tangent IDEAL"}},
      {"hs", {cmd_hs, 2, "hs IDEAL N"}},
      {"chi", {cmd_chi, 2, "chi IDEAL IDEAL"}},
      {"report", {cmd_report, 2, "report IDEAL IDEAL"}},
      {"samuel", {cmd_samuel, 2, "samuel IDEAL IDEAL"}},
      {"psi", {cmd_psi, 2, "psi IDEAL IDEAL"}},
      {"dimcut", {cmd_dimcut, 2, "dimcut IDEAL IDEAL"}},
      {"divisor", {cmd_divisor, 3, "divisor IDEAL POLY T"}},
      {"additivity", {cmd_additivity, 2, "additivity IDEAL CLAIM"}},
      {"format", {cmd_format, 0, "format"}},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

CommandOutput run_command(const SourceDocument& doc, const std::string& command, const std::vector<std::string>& args,
                          const CommandOptions& options) {
  auto it = table().find(command);
  if (it == table().end()) throw UsageError("unknown-command", "unknown command " + command);
  if (args.size() != it->second.arity)
    throw UsageError("usage", "usage: " + std::string(it->second.usage));
  if (!doc.ring) throw UsageError("no-ring", "no ring declared");
  for (const auto& a : args)
    if (a.empty()) throw UsageError("usage", "empty argument");

  CommandOutput out;
  out.document["command"] = command;
  out.document["arguments"] = args;
  out.document["version"] = LOCMULT_VERSION;
  out.document["ring"] = doc.ring->to_string();
  Context ctx{doc, args, options, options.local()};
  auto start = std::chrono::steady_clock::now();
  try {
    it->second.handler(ctx, out);
  } catch (const std::invalid_argument&) {
    throw UsageError("usage", "expected a number in: " + std::string(it->second.usage));
  } catch (const std::out_of_range&) {
    throw UsageError("usage", "number out of range in: " + std::string(it->second.usage));
  }
  if (options.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.document["timing_ms"] = ms;
    out.text += "time: " + std::to_string(ms) + " ms\n";
  }
  return out;
}

}  // namespace locmult
