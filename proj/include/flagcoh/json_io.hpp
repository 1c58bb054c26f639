#ifndef FLAGCOH_JSON_IO_HPP
#define FLAGCOH_JSON_IO_HPP

#include <json.hpp>

#include "flagcoh/presentation.hpp"
#include "flagcoh/reports.hpp"

namespace flagcoh::io {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const Composition& c);
/// {"shape":[...],"rows":[[...],...]}
json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);
/// [{"coeff":"p/q","exps":[...]}, ...] in graded-lex order.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, int nvars);
json to_json(const HilbertSeries& h);
json to_json(const StructureConstants& sc);
json to_json(const TransferReport& r);
json to_json(const Component& c);
json to_json(const PosetExport& p);

/// {"lambda","mu","hilbert","basis","family","certified"}.
json quotient_report(const GradedQuotient& q, const BasisCertificate& cert);

/// "p/q" for every rational, integers included.
std::string rational_text(const Rational& q);

}  // namespace flagcoh::io

#endif  // FLAGCOH_JSON_IO_HPP
