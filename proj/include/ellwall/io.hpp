#pragma once

#include "ellwall/hodge.hpp"
#include "ellwall/special.hpp"

#include <json.hpp>

#include <string>

namespace ellwall {

using json = nlohmann::json;

json to_json(const Rational& x);
Rational rational_from_json(const json& j, const std::string& what);
Integer integer_from_json(const json& j, const std::string& what);

json to_json(const QVector& v);
QVector vector_from_json(const json& j, const std::string& what);

json to_json(const SurfaceGeometry& s);
SurfaceGeometry surface_from_json(const json& j);  // validates
SurfaceGeometry load_surface(const std::string& path);

json to_json(const ChernVector& e);
ChernVector chern_from_json(const json& j, int ns_rank);

json to_json(const LambdaValue& v);
LambdaValue lambda_from_json(const json& j);
json to_json(const Classification& c);
json to_json(const IsotropicDecomposition& d);
json to_json(const WallLambda& w);
json to_json(const MoveDescriptor& m);
json to_json(const Wall1D& w);
json to_json(const ReductionCertificate& c);
json to_json(const HodgePolynomial& h);
json to_json(const RaySpec& r);
json to_json(const ChamberInterval& c);

}  // namespace ellwall
