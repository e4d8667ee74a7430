#include "hyperbridge/bridge.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "hyperbridge/error.hpp"
#include "hyperbridge/invariants.hpp"
#include "hyperbridge/polynomial.hpp"

namespace hyperbridge {

void BridgeParams::validate() const {
    if ((k * m * p).is_zero()) {
        throw Error(ErrorKind::DegenerateParams, "bridge parameters need k m p != 0");
    }
    if ((r * s * t).is_zero()) {
        throw Error(ErrorKind::DegenerateParams, "bridge parameters need r s t != 0");
    }
}

FactoredCurve BridgeParams::factored() const {
    validate();
    return FactoredCurve(k, m, p, r * s, t * s, r * t);
}

Rational UVCurve::residual(const Rational& u, const Rational& v) const {
    const Rational uv = u * v;
    return uv * uv - (Rational(2) * e * uv - Rational(2) * f * v - Rational(2) * g * u + h);
}

UVCurve params_to_uv(const BridgeParams& bp) {
    bp.validate();
    const auto& [k, m, p, r, s, t] = bp;
    UVCurve uv;
    uv.e = k * t + m * r + p * s;
    uv.f = Rational(2) * k * m * p;
    uv.g = Rational(2) * r * s * t;
    uv.h = Rational(2) * (k * m * r * t + k * p * t * s + m * p * r * s) - k * k * t * t - m * m * r * r -
           p * p * s * s;
    return uv;
}

CubicCurve uv_to_cubic(const UVCurve& uv) {
    if (uv.f.is_zero()) {
        throw Error(ErrorKind::NotCubic, "uv-curve with f = 0 has no cubic model");
    }
    return CubicCurve(Rational(-2) * uv.f, uv.h + uv.e * uv.e, Rational(-2) * uv.e * uv.g, uv.g * uv.g);
}

UVCurve cubic_to_uv(const CubicCurve& c) {
    const auto root = rational_sqrt(c.d());
    if (!root) {
        throw Error(ErrorKind::NotASquare, "constant term " + c.d().str() + " is not a rational square");
    }
    if (root->is_zero()) {
        throw Error(ErrorKind::ZeroG, "constant term is zero; e cannot be recovered");
    }
    UVCurve uv;
    uv.g = *root;
    uv.e = -c.c() / (Rational(2) * uv.g);
    uv.f = -c.a() / 2;
    uv.h = c.b() - uv.e * uv.e;
    return uv;
}

UVPoint point_map_uv(const UVCurve& uv, const CurvePoint& p) {
    const CubicCurve cubic = uv_to_cubic(uv);
    if (p.is_infinity()) {
        throw Error(ErrorKind::PointNotOnCurve, "the point at infinity has no uv image");
    }
    cubic.require_on_curve(p);
    if (p.x().is_zero()) {
        throw Error(ErrorKind::VZero, "point map is singular at x = 0");
    }
    const Rational& v = p.x();
    return {(p.y() + uv.e * v - uv.g) / (v * v), v};
}

CurvePoint point_from_uv(const UVCurve& uv, const UVPoint& p) {
    if (!uv.residual(p.u, p.v).is_zero()) {
        throw Error(ErrorKind::PointNotOnCurve, "(u, v) does not satisfy the uv-equation");
    }
    return {p.v, p.u * p.v * p.v - uv.e * p.v + uv.g};
}

BridgeParams factored_to_params(const FactoredCurve& fc) {
    if ((fc.l() * fc.n() * fc.q()).is_zero()) {
        throw Error(ErrorKind::ZeroDivisor, "factored_to_params needs l n q != 0");
    }
    const Rational ratio = fc.l() * fc.q() / fc.n();
    const auto r = rational_sqrt(ratio);
    if (!r) {
        throw Error(ErrorKind::NotASquare, "l q / n = " + ratio.str() + " is not a rational square");
    }
    return BridgeParams{fc.k(), fc.m(), fc.p(), *r, fc.l() / *r, fc.q() / *r};
}

namespace {

using Poly8 = SparsePoly<8>;

template <class T>
std::array<T, 8> place(const std::array<std::uint8_t, 8>& corner_symbol, const SymbolValues<T>& values) {
    std::array<T, 8> corners;
    for (std::size_t c = 0; c < 8; ++c) {
        corners[c] = values[corner_symbol[c]];
    }
    return corners;
}

std::array<std::uint8_t, 8> to_bytes(const CubeAssignment& a) {
    std::array<std::uint8_t, 8> out{};
    for (std::size_t c = 0; c < 8; ++c) {
        out[c] = static_cast<std::uint8_t>(a.corner_symbol[c]);
    }
    return out;
}

bool symbolic_match(const std::array<std::uint8_t, 8>& corner_symbol, int sign) {
    SymbolValues<Poly8> vars;
    for (std::size_t i = 0; i < 8; ++i) {
        vars[i] = Poly8::variable(i);
    }
    static const Poly8 target = cube_corner_equation(vars);
    Poly8 det = cayley_polynomial(place(corner_symbol, vars));
    if (sign < 0) {
        det = -det;
    }
    return det == target;
}

// Fixed probe points for the fast filter. Values stay small enough that a
// degree-4 expression with small coefficients cannot overflow 64 bits.
constexpr std::array<SymbolValues<std::int64_t>, 3> kProbes{{
    {3, -7, 11, 2, -5, 13, 17, -19},
    {-23, 29, 5, -31, 37, 4, -41, 43},
    {47, 6, -53, 59, -8, 61, 9, 67},
}};

}  // namespace

bool verify_assignment_symbolic(const CubeAssignment& assignment) {
    return symbolic_match(to_bytes(assignment), assignment.sign);
}

CubeAssignment derive_cube_assignment() {
    std::array<std::int64_t, kProbes.size()> targets{};
    for (std::size_t i = 0; i < kProbes.size(); ++i) {
        targets[i] = cube_corner_equation(kProbes[i]);
    }

    std::array<std::uint8_t, 8> perm{};
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    do {
        std::array<std::int64_t, kProbes.size()> dets{};
        for (std::size_t i = 0; i < kProbes.size(); ++i) {
            dets[i] = cayley_polynomial(place(perm, kProbes[i]));
        }
        for (const int sign : {1, -1}) {
            bool candidate = true;
            for (std::size_t i = 0; i < kProbes.size() && candidate; ++i) {
                candidate = sign * dets[i] == targets[i];
            }
            if (candidate && symbolic_match(perm, sign)) {
                CubeAssignment out;
                for (std::size_t c = 0; c < 8; ++c) {
                    out.corner_symbol[c] = static_cast<Symbol>(perm[c]);
                }
                out.sign = sign;
                return out;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    throw Error(ErrorKind::NoAssignmentFound, "no placement of the eight symbols reproduces the curve equation");
}

const CubeAssignment& cube_assignment() {
    static const CubeAssignment cached = derive_cube_assignment();
    return cached;
}

Hypermatrix222 cube_hypermatrix(const CubeAssignment& assignment, const SymbolValues<Rational>& values) {
    Hypermatrix222 out;
    for (std::size_t c = 0; c < 8; ++c) {
        out.entries()[c] = values[static_cast<std::size_t>(assignment.corner_symbol[c])];
    }
    return out;
}

bool assignment_reproduces(const CubeAssignment& assignment, const BridgeParams& bp) {
    const UVCurve uv = params_to_uv(bp);
    for (int u = -2; u <= 2; ++u) {
        for (int v = -2; v <= 2; ++v) {
            const SymbolValues<Rational> values{u, v, bp.k, bp.m, bp.p, bp.r, bp.s, bp.t};
            const Rational det = cayley_det(cube_hypermatrix(assignment, values)) * Rational(assignment.sign);
            if (det != uv.residual(u, v)) {
                return false;
            }
        }
    }
    return true;
}

std::array<std::array<std::size_t, 8>, 12> tetrahedral_rotations() {
    std::array<std::array<std::size_t, 8>, 12> out{};
    std::size_t count = 0;
    // Even axis permutations combined with an even number of axis flips.
    constexpr std::array<std::array<std::size_t, 3>, 3> even_perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    constexpr std::array<std::size_t, 4> even_flips{0b000, 0b011, 0b101, 0b110};
    for (const auto& perm : even_perms) {
        for (const auto flips : even_flips) {
            auto& rotation = out[count++];
            for (std::size_t c = 0; c < 8; ++c) {
                const auto idx = Hypermatrix222::unflatten(c);
                Hypermatrix222::Index moved{};
                for (std::size_t axis = 0; axis < 3; ++axis) {
                    const auto flip = static_cast<int>((flips >> axis) & 1U);
                    moved[axis] = idx[perm[axis]] ^ flip;
                }
                rotation[c] = Hypermatrix222::flat(moved);
            }
        }
    }
    return out;
}

CubeAssignment rotate(const CubeAssignment& assignment, const std::array<std::size_t, 8>& rotation) {
    CubeAssignment out = assignment;
    for (std::size_t c = 0; c < 8; ++c) {
        out.corner_symbol[c] = assignment.corner_symbol[rotation[c]];
    }
    return out;
}

}  // namespace hyperbridge
