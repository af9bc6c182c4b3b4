#pragma once

#include <string>

#include <json.hpp>

#include "intersect/comparisons.hpp"
#include "intersect/report.hpp"
#include "localalg/checks.hpp"

namespace locmult {

using Json = nlohmann::ordered_json;

Json series_json(const HilbertSeries& s);
Json certificate_json(const MultiplicityCertificate& c);
Json basis_json(const GroebnerBasis& gb);
Json cone_json(const TangentCone& cone);
Json report_json(const ChiReport& r);
Json divisor_json(const DivisorCheck& c);
Json additivity_json(const AdditivityCheck& c);
Json samuel_json(const SamuelCheck& c);
Json psi_json(const PsiDefect& c);
Json dimcut_json(const DimcutCheck& c);

// Two-space indented with a trailing newline; key order is insertion order.
std::string emit_json(const Json& j);

}  // namespace locmult
