#pragma once

#include <variant>

#include "json.hpp"

#include "hyperbridge/bridge.hpp"
#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/hypermatrix.hpp"
#include "hyperbridge/invariants.hpp"
#include "hyperbridge/trilinear.hpp"

namespace hyperbridge::io {

using nlohmann::json;

// Rationals are written as strings ("5", "-3/4"). On input an entry may be
// a JSON integer or such a string; anything else is MalformedInput.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Vector2& v);
Vector2 vector_from_json(const json& j);

/// {"shape": [2,2,2] or [2,2,2,2], "entries": [...]} with entries in flat
/// (lexicographic, last index fastest) order.
json to_json(const Hypermatrix222& a);
json to_json(const Hypermatrix2222& a);

using AnyHypermatrix = std::variant<Hypermatrix222, Hypermatrix2222>;
AnyHypermatrix hypermatrix_from_json(const json& j);
Hypermatrix222 hypermatrix222_from_json(const json& j);
Hypermatrix2222 hypermatrix2222_from_json(const json& j);

/// Five coefficients in A..E order.
json to_json(const BinaryQuartic& q);
json to_json(const QuarticInvariants& inv);

/// "O" for infinity, otherwise {"x": ..., "y": ...}.
json to_json(const CurvePoint& p);
CurvePoint point_from_json(const json& j);

json to_json(const WeierstrassCurve& c);
json to_json(const CubicCurve& c);
json to_json(const BridgeParams& bp);
json to_json(const UVCurve& uv);
json to_json(const TrilinearSolution& sol);
json to_json(const SearchReport& report);

}  // namespace hyperbridge::io
