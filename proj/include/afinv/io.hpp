#pragma once

// JSON documents for every exported type. Fractions are strings "p/q"; integers are
// numbers when they fit in 64 bits and decimal strings otherwise. Parsers throw
// InvalidInput on schema violations.

#include "afinv/bratteli.hpp"
#include "afinv/crossed.hpp"
#include "afinv/equivalence.hpp"
#include "afinv/invariant.hpp"
#include "afinv/qsys.hpp"

#include <json.hpp>

#include <string>

namespace afinv::io {

using Json = nlohmann::ordered_json;

Json load_file(const std::string& path);

Json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

/// {"generators": [[2]]}, with a minimal greedy generating set.
Json to_json(const Subgroup& h);
Subgroup subgroup_from_json(const FiniteAbelianGroup& g, const Json& j);

/// {"[2]": "1/2", ...} over every element of the domain.
Json to_json(const Character& chi);
/// Accepts the bare map or {"theta": map}; the listed values must single out one character.
Character character_from_json(const Subgroup& domain, const Json& j);

Json to_json(const SimpleBimodule& s);
SimpleBimodule bimodule_from_json(const FiniteAbelianGroup& g, const Json& j);
/// Also accepts {"label": "M_{2-2,0}^triv"}.
std::size_t bimodule_index_from_json(const FusionTable& table, const Json& j);

Json to_json(const FusionTable& t);

Json to_json(const IntMatrix& m);
/// Accepts a bare array of rows or {"rows": ...}.
IntMatrix matrix_from_json(const Json& j);
StationarySystem system_from_json(const Json& j);

Json to_json(const K0Description& d);
K0Description k0_from_json(const Json& j);

Json to_json(const EnrichedBratteliDiagram& d, const FusionTable& table);
/// Homogeneous shorthand ("vertex", "edge") or full form ("levels", "edges").
EnrichedBratteliDiagram diagram_from_json(const Json& j, std::size_t max_order = kDefaultMaxGroupOrder);

Json to_json(const InvariantData& inv);
InvariantData invariant_from_json(const Json& j);

Json to_json(const Verdict& v, const InvariantData& a);
Verdict verdict_from_json(const Json& j, const InvariantData& a);

Json to_json(const CrossedProductBlocks& b);

Json integer_json(const Integer& n);
Integer integer_from_json(const Json& j);
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

} // namespace afinv::io
