#include "hyperbridge/invariants.hpp"

#include <algorithm>

#include "hyperbridge/error.hpp"
#include "hyperbridge/polynomial.hpp"

namespace hyperbridge {

Rational BinaryQuartic::operator()(const Rational& x, const Rational& y) const {
    const Rational x2 = x * x;
    const Rational y2 = y * y;
    return A * x2 * x2 + B * x2 * x * y + C * x2 * y2 + D * x * y2 * y + E * y2 * y2;
}

bool BinaryQuartic::is_zero() const {
    return A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero() && E.is_zero();
}

BinaryQuartic BinaryQuartic::scaled(const Rational& factor) const {
    return {A * factor, B * factor, C * factor, D * factor, E * factor};
}

Rational cayley_det(const Hypermatrix222& a) {
    std::array<Rational, 8> corners;
    std::copy(a.entries().begin(), a.entries().end(), corners.begin());
    return cayley_polynomial(corners);
}

BinaryQuartic interpolate_quartic(const std::array<Rational, 5>& values) {
    // Nodes: v0 = Q(1,0) = A, v1 = Q(0,1) = E, v2 = Q(1,1), v3 = Q(1,-1),
    // v4 = Q(2,1) = 16A + 8B + 4C + 2D + E.
    const Rational& A = values[0];
    const Rational& E = values[1];
    const Rational odd_plus_even = values[2] - A - E;   // B + C + D
    const Rational even_minus_odd = values[3] - A - E;  // -B + C - D
    const Rational C = (odd_plus_even + even_minus_odd) / 2;
    const Rational b_plus_d = (odd_plus_even - even_minus_odd) / 2;
    const Rational eight_b_two_d = values[4] - Rational(16) * A - Rational(4) * C - E;
    const Rational B = (eight_b_two_d - Rational(2) * b_plus_d) / 6;
    return {A, B, C, b_plus_d - B, E};
}

BinaryQuartic quartic_from_hypermatrix(const Hypermatrix2222& a4) {
    std::array<Rational, 5> values;
    for (std::size_t i = 0; i < kInterpolationNodes.size(); ++i) {
        const auto& node = kInterpolationNodes[i];
        values[i] = cayley_det(contract_last(a4, Vector2{node[0], node[1]}));
    }
    return interpolate_quartic(values);
}

QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
    const Rational& a0 = q.A;
    const Rational a1 = q.B / 4;
    const Rational a2 = q.C / 6;
    const Rational a3 = q.D / 4;
    const Rational& a4 = q.E;

    QuarticInvariants inv;
    inv.S = a0 * a4 - Rational(4) * a1 * a3 + Rational(3) * a2 * a2;
    inv.T = a0 * a2 * a4 + Rational(2) * a1 * a2 * a3 - a0 * a3 * a3 - a2 * a2 * a2 - a4 * a1 * a1;
    inv.delta = inv.S * inv.S * inv.S - Rational(27) * inv.T * inv.T;

    inv.I = Rational(12) * q.A * q.E - Rational(3) * q.B * q.D + q.C * q.C;
    inv.Jcov = Rational(72) * q.A * q.C * q.E + Rational(9) * q.B * q.C * q.D - Rational(27) * q.A * q.D * q.D -
               Rational(27) * q.B * q.B * q.E - Rational(2) * q.C * q.C * q.C;
    return inv;
}

Rational schlafli_delta(const Hypermatrix2222& a4) {
    return quartic_invariants(quartic_from_hypermatrix(a4)).delta;
}

Rational j_invariant(const BinaryQuartic& q) {
    const auto inv = quartic_invariants(q);
    if (inv.delta.is_zero()) {
        throw Error(ErrorKind::SingularCurve, "quartic has zero discriminant; J is undefined");
    }
    return inv.S * inv.S * inv.S / inv.delta;
}

bool has_repeated_root(const BinaryQuartic& q) {
    if (q.is_zero()) {
        throw Error(ErrorKind::ZeroQuartic, "zero quartic has no well-defined roots");
    }
    // The root at infinity (1:0) has multiplicity equal to the number of
    // vanishing leading coefficients A, B, ...
    if (q.A.is_zero() && q.B.is_zero()) {
        return true;
    }
    const UPoly affine({q.E, q.D, q.C, q.B, q.A});
    return gcd(affine, affine.derivative()).degree() > 0;
}

}  // namespace hyperbridge
