#pragma once

// JSON encodings. Rationals are strings "p/q"; integers that fit in 64 bits
// are plain numbers.

#include "json.hpp"

#include "wallcross/reduce.hpp"

namespace wallcross {

using json = nlohmann::ordered_json;

json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(const NumClass& v);
NumClass class_from_json(const json& j);

json to_json(const CY3Context& ctx);
CY3Context context_from_json(const json& j);

json to_json(const Region& r);
Region region_from_json(const json& j);

json to_json(const VnBounds& vb);
VnBounds bounds_from_json(const json& j);

json to_json(const WallLine& l);
WallLine line_from_json(const json& j);

json to_json(const Wall& w);
Wall wall_from_json(const json& j);
json walls_to_json(const std::vector<Wall>& walls);
std::vector<Wall> walls_from_json(const json& j);

json to_json(const InvariantExpr& e);
InvariantExpr expr_from_json(const json& j);
json to_json(const Relation& r);
Relation relation_from_json(const json& j);

json to_json(const QuarticCertificate& c);
json to_json(const ReductionReport& rep);

}  // namespace wallcross
