#pragma once

#include <string>
#include <vector>

#include "hyperbridge/rational.hpp"

namespace hyperbridge {

/// Rational point of an elliptic curve, or the point at infinity (the group
/// identity). Membership is checked by the curve that accepts the point.
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !affine_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    /// "O" or "(x, y)".
    std::string str() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    bool affine_ = false;
    Rational x_;
    Rational y_;
};

/// y^2 = x^3 + alpha x + beta, nonsingular unless built with unchecked().
class WeierstrassCurve {
public:
    /// Throws SingularCurve when 4 alpha^3 + 27 beta^2 == 0.
    WeierstrassCurve(Rational alpha, Rational beta);

    static WeierstrassCurve unchecked(Rational alpha, Rational beta);

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    /// 4 alpha^3 + 27 beta^2.
    Rational discriminant_term() const;
    bool is_singular() const { return discriminant_term().is_zero(); }

    bool contains(const CurvePoint& p) const;

    /// Throws PointNotOnCurve.
    CurvePoint point(Rational x, Rational y) const;
    void require_on_curve(const CurvePoint& p) const;

    friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

private:
    struct Unchecked {};
    WeierstrassCurve(Unchecked, Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    Rational alpha_;
    Rational beta_;
};

/// y^2 = a x^3 + b x^2 + c x + d with a != 0.
class CubicCurve {
public:
    /// Throws DegenerateCubic when a == 0.
    CubicCurve(Rational a, Rational b, Rational c, Rational d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational rhs(const Rational& x) const { return ((a_ * x + b_) * x + c_) * x + d_; }
    bool contains(const CurvePoint& p) const;
    void require_on_curve(const CurvePoint& p) const;

    friend bool operator==(const CubicCurve&, const CubicCurve&) = default;

private:
    Rational a_;
    Rational b_;
    Rational c_;
    Rational d_;
};

/// y^2 = 4 (l - k x)(n - m x)(q - p x) with k m p != 0.
class FactoredCurve {
public:
    /// Throws DegenerateCubic when k m p == 0.
    FactoredCurve(Rational k, Rational m, Rational p, Rational l, Rational n, Rational q);

    const Rational& k() const { return k_; }
    const Rational& m() const { return m_; }
    const Rational& p() const { return p_; }
    const Rational& l() const { return l_; }
    const Rational& n() const { return n_; }
    const Rational& q() const { return q_; }

    CubicCurve expanded() const;

private:
    Rational k_, m_, p_, l_, n_, q_;
};

/// Invertible change of coordinates from a CubicCurve to Weierstrass form:
/// X = a x + b/3, Y = a y.
struct WeierstrassModel {
    CubicCurve source;
    WeierstrassCurve curve;

    CurvePoint to_weierstrass(const CurvePoint& p) const;
    CurvePoint from_weierstrass(const CurvePoint& p) const;
};

/// Scales out the leading coefficient and depresses the cubic. Throws
/// SingularCurve if the cubic has a repeated root.
WeierstrassModel cubic_to_weierstrass(const CubicCurve& c);

CurvePoint negate(const CurvePoint& p);

/// Chord-and-tangent sum. Throws PointNotOnCurve if either input is off the curve.
CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q);

/// n P for any integer n (negative n negates).
CurvePoint multiply(const WeierstrassCurve& curve, long n, const CurvePoint& p);

/// Distinct rational roots of a x^3 + b x^2 + c x + d in increasing order.
std::vector<Rational> rational_cubic_roots(const Rational& a, const Rational& b, const Rational& c,
                                           const Rational& d);

/// Rational points with y = 0, sorted by x.
std::vector<CurvePoint> two_torsion(const CubicCurve& c);
bool has_full_two_torsion(const CubicCurve& c);

/// Translates x so that p sits at x = 0. Throws PointNotOnCurve.
CubicCurve shift_to_origin(const CubicCurve& c, const CurvePoint& p);

/// Bounded by Mazur: a rational torsion point has order at most 12.
inline constexpr int kMaxTorsionOrder = 12;

/// True iff n P = O for some 1 <= n <= 12.
bool is_torsion(const WeierstrassCurve& curve, const CurvePoint& p);

/// 1728 * 4 alpha^3 / (4 alpha^3 + 27 beta^2). Throws SingularCurve.
Rational weierstrass_j(const WeierstrassCurve& curve);

}  // namespace hyperbridge
