#pragma once

#include <array>
#include <optional>

#include "hyperbridge/hypermatrix.hpp"
#include "hyperbridge/rational.hpp"

namespace hyperbridge {

/// Q(x, y) = A x^4 + B x^3 y + C x^2 y^2 + D x y^3 + E y^4.
struct BinaryQuartic {
    Rational A;
    Rational B;
    Rational C;
    Rational D;
    Rational E;

    Rational operator()(const Rational& x, const Rational& y) const;
    bool is_zero() const;
    BinaryQuartic scaled(const Rational& factor) const;
    std::array<Rational, 5> coefficients() const { return {A, B, C, D, E}; }

    friend bool operator==(const BinaryQuartic&, const BinaryQuartic&) = default;
};

/// S, T and delta = S^3 - 27 T^2 of a binary quartic, taken on the
/// binomially weighted coefficients (A, B/4, C/6, D/4, E). The integer-scaled
/// companions satisfy I = 12 S, Jcov = 432 T and 4 I^3 - Jcov^2 = 6912 delta.
struct QuarticInvariants {
    Rational S;
    Rational T;
    Rational delta;
    Rational I;
    Rational Jcov;

    friend bool operator==(const QuarticInvariants&, const QuarticInvariants&) = default;
};

/// Cayley's hyperdeterminant written over any commutative ring type, with the
/// corners in flat order a..h:
///   (ah + de - cf - bg)^2 - 4 (ad - bc)(eh - fg)
template <class T>
T cayley_polynomial(const std::array<T, 8>& c) {
    const T& a = c[0];
    const T& b = c[1];
    const T& cc = c[2];
    const T& d = c[3];
    const T& e = c[4];
    const T& f = c[5];
    const T& g = c[6];
    const T& h = c[7];
    const T mixed = a * h + d * e - cc * f - b * g;
    const T front = a * d - b * cc;
    const T back = e * h - f * g;
    return mixed * mixed - T(4) * front * back;
}

Rational cayley_det(const Hypermatrix222& a);

/// The quartic Q(x, y) = cayley_det(contract_last(a4, (x, y))), recovered by
/// exact interpolation.
BinaryQuartic quartic_from_hypermatrix(const Hypermatrix2222& a4);

/// Coefficients of the quartic p with p(x_i, y_i) = values[i] at the nodes
/// (1,0), (0,1), (1,1), (1,-1), (2,1).
BinaryQuartic interpolate_quartic(const std::array<Rational, 5>& values);

inline constexpr std::array<std::array<int, 2>, 5> kInterpolationNodes{{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}}};

QuarticInvariants quartic_invariants(const BinaryQuartic& q);

/// Schläfli's hyperdeterminant in the normalized scale used by
/// quartic_invariants (the integer-coefficient discriminant is 6912 times it).
Rational schlafli_delta(const Hypermatrix2222& a4);

/// S^3 / delta. Throws SingularCurve when delta == 0.
Rational j_invariant(const BinaryQuartic& q);

/// Independent check of the discriminant: gcd of Q(x,1) with its derivative,
/// plus the multiplicity of the root at infinity. Throws ZeroQuartic for 0.
bool has_repeated_root(const BinaryQuartic& q);

}  // namespace hyperbridge
