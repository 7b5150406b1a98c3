#pragma once

#include "innc/complex.hpp"
#include "innc/covers.hpp"
#include "innc/global_polytope.hpp"
#include "innc/homology.hpp"
#include "innc/modpres.hpp"
#include "innc/polytope.hpp"
#include "innc/subtorus.hpp"
#include "innc/zeta.hpp"

#include <json.hpp>

namespace innc {

using Json = nlohmann::json;

/// Member lookup raising SchemaError when absent.
const Json& require(const Json& j, const std::string& key);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const IntMatrix& m);
Rational rational_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
std::vector<long> long_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);

Json to_json(const Character& chi);
Character character_from_json(const Json& j);

Json to_json(const TranslatedSubtorus& s);
TranslatedSubtorus subtorus_from_json(const Json& j);

Json to_json(const AbelianGroup& g);
Json to_json(const DivisorData& d);
DivisorData divisor_from_json(const Json& j);

Json to_json(const CharacterMap& m);
CharacterMap character_map_from_json(const Json& j);
Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

Json to_json(const ModulePresentation& p);
Json to_json(const CharVarReport& r);

Json to_json(const QPolytope& p);
QPolytope polytope_from_json(const Json& j);
Json to_json(const FaceGeometry& f);
Json to_json(const QFace& f);
Json to_json(const CatalogEntry& e);
CatalogEntry catalog_from_json(const Json& j);
Json to_json(const ContributingVerdict& v);
Json to_json(const GlobalRegion& g);

Json to_json(const BranchDatum& b);
BranchDatum branch_from_json(const Json& j);
Json to_json(const QuasiadjunctionReport& r);

Json to_json(const EPoly& e);
EPoly epoly_from_json(const Json& j);
Json to_json(const ResolutionDatum& rd);
ResolutionDatum resolution_from_json(const Json& j);
Json to_json(const ZetaFunction& z);
Json to_json(const TopRealization& t);
Json to_json(const HodgeRealization& h);

}  // namespace innc
