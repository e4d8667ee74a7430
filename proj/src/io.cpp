#include "hyperbridge/io.hpp"

#include "hyperbridge/error.hpp"

namespace hyperbridge::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

template <std::size_t Rank>
json hypermatrix_json(const Hypermatrix<Rank>& a) {
    json shape = json::array();
    for (std::size_t i = 0; i < Rank; ++i) {
        shape.push_back(2);
    }
    json entries = json::array();
    for (const auto& e : a.entries()) {
        entries.push_back(to_json(e));
    }
    return {{"shape", shape}, {"entries", entries}};
}

template <std::size_t Rank>
Hypermatrix<Rank> fill(const json& entries) {
    Hypermatrix<Rank> out;
    for (std::size_t i = 0; i < Hypermatrix<Rank>::kSize; ++i) {
        out.entries()[i] = rational_from_json(entries[i]);
    }
    return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    malformed("expected an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Vector2& v) { return json::array({to_json(v.c0), to_json(v.c1)}); }

Vector2 vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        malformed("expected a 2-vector, got " + j.dump());
    }
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const Hypermatrix222& a) { return hypermatrix_json(a); }
json to_json(const Hypermatrix2222& a) { return hypermatrix_json(a); }

AnyHypermatrix hypermatrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("entries")) {
        malformed("hypermatrix must be an object with \"shape\" and \"entries\"");
    }
    const json& shape = j["shape"];
    const json& entries = j["entries"];
    if (!shape.is_array() || !entries.is_array()) {
        malformed("\"shape\" and \"entries\" must be arrays");
    }
    for (const auto& dim : shape) {
        if (!dim.is_number_integer() || dim.get<std::int64_t>() != 2) {
            malformed("only axes of length 2 are supported, got shape " + shape.dump());
        }
    }
    if (shape.size() == 3 && entries.size() == 8) {
        return fill<3>(entries);
    }
    if (shape.size() == 4 && entries.size() == 16) {
        return fill<4>(entries);
    }
    malformed("shape " + shape.dump() + " with " + std::to_string(entries.size()) + " entries is not supported");
}

Hypermatrix222 hypermatrix222_from_json(const json& j) {
    auto any = hypermatrix_from_json(j);
    if (auto* a = std::get_if<Hypermatrix222>(&any)) {
        return *a;
    }
    malformed("expected shape [2,2,2]");
}

Hypermatrix2222 hypermatrix2222_from_json(const json& j) {
    auto any = hypermatrix_from_json(j);
    if (auto* a = std::get_if<Hypermatrix2222>(&any)) {
        return *a;
    }
    malformed("expected shape [2,2,2,2]");
}

json to_json(const BinaryQuartic& q) {
    json out = json::array();
    for (const auto& c : q.coefficients()) {
        out.push_back(to_json(c));
    }
    return out;
}

json to_json(const QuarticInvariants& inv) {
    return {{"S", to_json(inv.S)},
            {"T", to_json(inv.T)},
            {"delta", to_json(inv.delta)},
            {"I", to_json(inv.I)},
            {"Jcov", to_json(inv.Jcov)}};
}

json to_json(const CurvePoint& p) {
    if (p.is_infinity()) {
        return "O";
    }
    return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

CurvePoint point_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "O") {
        return CurvePoint::infinity();
    }
    if (j.is_object() && j.contains("x") && j.contains("y")) {
        return {rational_from_json(j["x"]), rational_from_json(j["y"])};
    }
    malformed("expected \"O\" or {\"x\":..,\"y\":..}, got " + j.dump());
}

json to_json(const WeierstrassCurve& c) { return {{"alpha", to_json(c.alpha())}, {"beta", to_json(c.beta())}}; }

json to_json(const CubicCurve& c) {
    return {{"a", to_json(c.a())}, {"b", to_json(c.b())}, {"c", to_json(c.c())}, {"d", to_json(c.d())}};
}

json to_json(const BridgeParams& bp) {
    return {{"k", to_json(bp.k)}, {"m", to_json(bp.m)}, {"p", to_json(bp.p)},
            {"r", to_json(bp.r)}, {"s", to_json(bp.s)}, {"t", to_json(bp.t)}};
}

json to_json(const UVCurve& uv) {
    return {{"e", to_json(uv.e)}, {"f", to_json(uv.f)}, {"g", to_json(uv.g)}, {"h", to_json(uv.h)}};
}

json to_json(const TrilinearSolution& sol) {
    return {{"x", to_json(sol.x)}, {"y", to_json(sol.y)}, {"z", to_json(sol.z)}, {"degenerate", sol.degenerate}};
}

json to_json(const SearchReport& report) {
    json solutions = json::array();
    for (const auto& sol : report.solutions) {
        solutions.push_back(to_json(sol));
    }
    return {{"bound", report.bound},
            {"candidates_tested", report.candidates_tested},
            {"solutions", solutions},
            {"quartic", to_json(report.quartic)},
            {"S", to_json(report.invariants.S)},
            {"T", to_json(report.invariants.T)},
            {"delta", to_json(report.invariants.delta)},
            {"J", report.J ? to_json(*report.J) : json(nullptr)},
            {"degenerate_quartic", report.degenerate_quartic}};
}

}  // namespace hyperbridge::io
