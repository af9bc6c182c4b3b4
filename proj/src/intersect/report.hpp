#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intersect/chi.hpp"

namespace locmult {

enum class Verdict { holds, fails, not_applicable, caveat };

std::string verdict_name(Verdict v);

struct ReportFlags {
  bool complementary = false;
  bool finite_colength = false;
  bool origin_supported = false;
  std::optional<bool> M_flat_over_t;
  std::optional<bool> N_flat_over_t;
  bool equidim_asserted = false;
};

// Conditions (ii)-(v) for flat M, N with e(M) = e(M/tM).  When only N
// satisfies that equality the roles are swapped and `role` is "N".
struct ConditionsE {
  bool hypothesis = false;
  std::string role = "M";
  bool ii = false;
  bool iii = false;
  bool iv = false;
  bool v = false;
};

struct ReportVerdicts {
  Verdict theorem_A = Verdict::not_applicable;
  Verdict theorem_B = Verdict::not_applicable;
  Verdict theorem_C = Verdict::not_applicable;
  Verdict theorem_D = Verdict::not_applicable;
  Verdict theorem_E = Verdict::not_applicable;
  Verdict conjecture_I = Verdict::not_applicable;
  Verdict tennison = Verdict::not_applicable;
};

struct ChiReport {
  std::int64_t chi = 0;
  MultiplicityCertificate chi_certificate;
  MultiplicityCertificate e_M;
  MultiplicityCertificate e_N;
  MultiplicityCertificate e_tensor;
  // "dvr" when the ring has a uniformizer, else "field".
  std::string tensor_mode;
  unsigned dim_M = 0;
  unsigned dim_N = 0;
  unsigned dim_A = 0;
  std::int64_t excess = 0;
  unsigned tangent_dim = 0;
  std::optional<std::int64_t> e_M_mod_t;
  std::optional<std::int64_t> e_N_mod_t;
  std::optional<ConditionsE> conditions_E;
  ReportFlags flags;
  ReportVerdicts verdicts;
  // Distinguished findings, e.g. "counterexample-candidate: ...".
  std::vector<std::string> diagnostics;
  std::vector<std::string> notes;
};

ChiReport serre_report(const Ideal& i, const Ideal& j, bool equidim_asserted, const LocalConfig& config = {});

}  // namespace locmult
