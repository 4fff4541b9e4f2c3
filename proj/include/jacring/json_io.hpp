#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jacring/borcherds.hpp"
#include "jacring/gen_poly.hpp"
#include "jacring/jacobi_form.hpp"
#include "jacring/ring_structure.hpp"
#include "jacring/siegel.hpp"

// JSON forms of every value the command line reads or writes.  Emission is
// canonical: keys alphabetical, terms in ascending key order, rationals as
// "p" or "p/q".  parse(serialize(x)) == x and serialize(parse(s)) == s for
// canonical s; anything malformed raises ParseError.

namespace jacring {

nlohmann::json to_json(const ScaledSeries& s);
ScaledSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const JacobiForm& f);
JacobiForm jacobi_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeneratorPolynomial& p);
GeneratorPolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FourierJacobiExpansion& F);
FourierJacobiExpansion fourier_jacobi_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SingularData& s);
SingularData singular_from_json(const nlohmann::json& j);

// Output-only payloads.
nlohmann::json to_json(const IntegralityCertificate& c);
nlohmann::json to_json(const SiegelCertificate& c);
nlohmann::json to_json(const std::vector<RelationResult>& rs);
nlohmann::json to_json(const PsiBasis& b);

// The one dump format used everywhere (2-space indent, trailing newline).
std::string dump_json(const nlohmann::json& j);

nlohmann::json parse_json(const std::string& text);

} // namespace jacring
