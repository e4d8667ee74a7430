#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/hypermatrix.hpp"
#include "hyperbridge/rational.hpp"

namespace hyperbridge {

/// Parameters of the fully 2-torsioned family
///   y^2 = 4 (rs - kx)(ts - mx)(rt - px).
struct BridgeParams {
    Rational k;
    Rational m;
    Rational p;
    Rational r;
    Rational s;
    Rational t;

    /// Throws DegenerateParams unless k m p != 0 and r s t != 0.
    void validate() const;

    FactoredCurve factored() const;

    friend bool operator==(const BridgeParams&, const BridgeParams&) = default;
};

/// u^2 v^2 = 2 e u v - 2 f v - 2 g u + h.
struct UVCurve {
    Rational e;
    Rational f;
    Rational g;
    Rational h;

    /// u^2 v^2 - (2euv - 2fv - 2gu + h); zero exactly on the curve.
    Rational residual(const Rational& u, const Rational& v) const;

    friend bool operator==(const UVCurve&, const UVCurve&) = default;
};

struct UVPoint {
    Rational u;
    Rational v;

    friend bool operator==(const UVPoint&, const UVPoint&) = default;
};

/// Throws DegenerateParams.
UVCurve params_to_uv(const BridgeParams& bp);

/// Completes the square in u: y = u v^2 - e v + g, x = v gives
///   y^2 = -2f x^3 + (h + e^2) x^2 - 2eg x + g^2.
/// Throws NotCubic when f == 0.
CubicCurve uv_to_cubic(const UVCurve& uv);

/// Inverse of uv_to_cubic with g = +sqrt(d). Throws NotASquare or ZeroG.
UVCurve cubic_to_uv(const CubicCurve& c);

/// (x, y) on uv_to_cubic(uv) to (u, v) = ((y + e x - g) / x^2, x).
/// Throws VZero at x == 0, PointNotOnCurve off the curve.
UVPoint point_map_uv(const UVCurve& uv, const CurvePoint& p);

/// (u, v) to (x, y) = (v, u v^2 - e v + g).
CurvePoint point_from_uv(const UVCurve& uv, const UVPoint& p);

/// Solves l = rs, n = ts, q = rt with r = +sqrt(lq/n).
/// Throws ZeroDivisor or NotASquare.
BridgeParams factored_to_params(const FactoredCurve& fc);

/// The eight cube-corner symbols, in canonical order.
enum class Symbol : std::size_t { u = 0, v, k, m, p, r, s, t };
inline constexpr std::array<std::string_view, 8> kSymbolNames{"u", "v", "k", "m", "p", "r", "s", "t"};

/// Values of the eight symbols, indexed by Symbol.
template <class T>
using SymbolValues = std::array<T, 8>;

/// The curve equation in all eight symbols, equal to
///   u^2 v^2 - (2euv - 2fv - 2gu + h)
/// once e, f, g, h are expanded in terms of k, m, p, r, s, t.
template <class T>
T cube_corner_equation(const SymbolValues<T>& x) {
    const T& u = x[0];
    const T& v = x[1];
    const T& k = x[2];
    const T& m = x[3];
    const T& p = x[4];
    const T& r = x[5];
    const T& s = x[6];
    const T& t = x[7];
    const T uv = u * v;
    const T kt = k * t;
    const T mr = m * r;
    const T ps = p * s;
    return uv * uv + kt * kt + mr * mr + ps * ps - T(2) * kt * uv - T(2) * mr * uv - T(2) * ps * uv -
           T(2) * kt * mr - T(2) * kt * ps - T(2) * mr * ps + T(4) * k * m * p * v + T(4) * r * s * t * u;
}

/// Placement of the eight symbols on the corners of a 2x2x2 hypermatrix such
/// that sign * cayley_det equals cube_corner_equation as a polynomial.
struct CubeAssignment {
    std::array<Symbol, 8> corner_symbol;  ///< indexed by flat corner position a..h
    int sign = 1;

    friend bool operator==(const CubeAssignment&, const CubeAssignment&) = default;
};

/// Exhaustive search over all 8! placements and both signs, returning the
/// first match in lexicographic placement order (sign +1 before -1).
/// Candidates pass an integer evaluation filter and are then confirmed by
/// full monomial expansion. Throws NoAssignmentFound.
CubeAssignment derive_cube_assignment();

/// derive_cube_assignment(), computed once.
const CubeAssignment& cube_assignment();

/// Full monomial comparison of sign * cayley_det against the equation.
bool verify_assignment_symbolic(const CubeAssignment& assignment);

Hypermatrix222 cube_hypermatrix(const CubeAssignment& assignment, const SymbolValues<Rational>& values);

/// Checks sign * cayley_det(cube) == UV residual for the given parameters on
/// a fixed grid of (u, v) values.
bool assignment_reproduces(const CubeAssignment& assignment, const BridgeParams& bp);

/// The 12 rotations of the cube that keep each inscribed tetrahedron in
/// place, as corner permutations: rotated[c] = original[rotation[c]].
std::array<std::array<std::size_t, 8>, 12> tetrahedral_rotations();

CubeAssignment rotate(const CubeAssignment& assignment, const std::array<std::size_t, 8>& rotation);

}  // namespace hyperbridge
