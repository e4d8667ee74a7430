#include "doctest.h"

#include <algorithm>

#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/error.hpp"
#include "support/oracles.hpp"

using namespace hyperbridge;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
}

// y^2 = x^3 - 25x: rank one, generated by (-4, 6) modulo full 2-torsion.
const WeierstrassCurve& congruent5() {
    static const WeierstrassCurve curve(-25, 0);
    return curve;
}

}  // namespace

TEST_CASE("curve construction") {
    CHECK(kind_of([] { WeierstrassCurve(-3, 2); }) == ErrorKind::SingularCurve);
    CHECK(WeierstrassCurve::unchecked(-3, 2).is_singular());
    CHECK(kind_of([] { CubicCurve(0, 1, 2, 3); }) == ErrorKind::DegenerateCubic);
    CHECK(kind_of([] { FactoredCurve(1, 0, 1, 1, 1, 1); }) == ErrorKind::DegenerateCubic);
    CHECK(kind_of([] { (void)congruent5().point(1, 1); }) == ErrorKind::PointNotOnCurve);
    CHECK(congruent5().contains(CurvePoint::infinity()));
    CHECK(CurvePoint::infinity().str() == "O");
    CHECK(CurvePoint(Rational(1) / 2, -3).str() == "(1/2, -3)");
}

TEST_CASE("FactoredCurve expansion") {
    const FactoredCurve fc(1, 2, 3, 1, 1, 1);
    CHECK(fc.expanded() == CubicCurve(-24, 44, -24, 4));
}

TEST_CASE("cubic_to_weierstrass") {
    SUBCASE("4x^3 - 4x") {
        const auto model = cubic_to_weierstrass(CubicCurve(4, 0, -4, 0));
        CHECK(model.curve == WeierstrassCurve(-16, 0));
        CHECK(model.to_weierstrass({1, 0}) == CurvePoint(4, 0));
    }
    SUBCASE("repeated root") {
        CHECK(kind_of([] { (void)cubic_to_weierstrass(CubicCurve(1, -2, 1, 0)); }) == ErrorKind::SingularCurve);
    }
    SUBCASE("points map across and back") {
        oracle::Rng rng(31);
        int tested = 0;
        for (int trial = 0; trial < 200 && tested < 40; ++trial) {
            const Rational a = rng.nonzero(-5, 5);
            const Rational b = rng.uniform(-5, 5);
            const Rational c = rng.uniform(-5, 5);
            const Rational x = Rational(rng.uniform(-6, 6)) / rng.nonzero(1, 3);
            const Rational y = Rational(rng.uniform(-6, 6)) / rng.nonzero(1, 3);
            // choose d so that (x, y) lies on the curve
            const Rational d = y * y - ((a * x + b) * x + c) * x;
            const CubicCurve cubic(a, b, c, d);
            WeierstrassModel model{cubic, WeierstrassCurve::unchecked(0, 0)};
            try {
                model = cubic_to_weierstrass(cubic);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::SingularCurve);
                continue;
            }
            ++tested;
            const CurvePoint p(x, y);
            const auto w = model.to_weierstrass(p);
            CHECK(model.curve.contains(w));
            CHECK(model.from_weierstrass(w) == p);
            CHECK(model.to_weierstrass(CurvePoint::infinity()).is_infinity());
        }
        CHECK(tested >= 20);
    }
}

TEST_CASE("doubling matches the tangent line") {
    // (x - x1)^2 (x - x3) must equal x^3 + alpha x + beta - L(x)^2 where L is
    // the line through P and -2P.
    const auto& curve = congruent5();
    CurvePoint p(-4, 6);
    for (int step = 0; step < 4; ++step) {
        const auto q = add_points(curve, p, p);
        REQUIRE_FALSE(q.is_infinity());
        CHECK(curve.contains(q));
        const Rational slope = (-q.y() - p.y()) / (q.x() - p.x());
        for (long xi = -3; xi <= 3; ++xi) {
            const Rational x(xi);
            const Rational line = slope * (x - p.x()) + p.y();
            const Rational lhs = (x - p.x()) * (x - p.x()) * (x - q.x());
            const Rational rhs = x * x * x + curve.alpha() * x + curve.beta() - line * line;
            CHECK(lhs == rhs);
        }
        p = q;
    }
    CHECK(add_points(curve, {-4, 6}, {-4, 6}) == CurvePoint(Rational(1681) / 144, Rational(-62279) / 1728));
}

TEST_CASE("negation and two-torsion doubling") {
    CHECK(negate({3, 4}) == CurvePoint(3, -4));
    CHECK(negate(CurvePoint::infinity()).is_infinity());
    CHECK(add_points(congruent5(), {5, 0}, {5, 0}).is_infinity());
    CHECK(add_points(congruent5(), {-4, 6}, {-4, -6}).is_infinity());
    CHECK(kind_of([] { (void)add_points(congruent5(), {1, 1}, {5, 0}); }) == ErrorKind::PointNotOnCurve);
}

TEST_CASE("group axioms on multiples and torsion translates") {
    const auto& curve = congruent5();
    const CurvePoint p(-4, 6);
    std::vector<CurvePoint> pts{CurvePoint::infinity()};
    for (const CurvePoint& t : {CurvePoint::infinity(), CurvePoint(-5, 0), CurvePoint(0, 0), CurvePoint(5, 0)}) {
        for (long i = -2; i <= 2; ++i) {
            pts.push_back(add_points(curve, multiply(curve, i, p), t));
        }
    }
    for (const auto& a : pts) {
        CHECK(curve.contains(a));
        CHECK(add_points(curve, a, CurvePoint::infinity()) == a);
        CHECK(add_points(curve, a, negate(a)).is_infinity());
        for (const auto& b : pts) {
            CHECK(add_points(curve, a, b) == add_points(curve, b, a));
        }
    }
    for (std::size_t i = 0; i < pts.size(); i += 3) {
        for (std::size_t j = 1; j < pts.size(); j += 4) {
            for (std::size_t k = 2; k < pts.size(); k += 5) {
                const auto& a = pts[i];
                const auto& b = pts[j];
                const auto& c = pts[k];
                CHECK(add_points(curve, add_points(curve, a, b), c) == add_points(curve, a, add_points(curve, b, c)));
            }
        }
    }
    CHECK(add_points(curve, {-5, 0}, {0, 0}) == CurvePoint(5, 0));
    CHECK(multiply(curve, -3, p) == negate(multiply(curve, 3, p)));
    CHECK(multiply(curve, 0, p).is_infinity());
    CHECK(multiply(curve, 5, p) == add_points(curve, multiply(curve, 2, p), multiply(curve, 3, p)));
}

TEST_CASE("rational_cubic_roots") {
    CHECK(rational_cubic_roots(1, 0, -25, 0) == std::vector<Rational>{-5, 0, 5});
    CHECK(rational_cubic_roots(1, 0, 0, -2).empty());
    CHECK(rational_cubic_roots(1, -2, 1, 0) == std::vector<Rational>{0, 1});

    oracle::Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> roots;
        for (int i = 0; i < 3; ++i) {
            roots.push_back(Rational(rng.uniform(-40, 40)) / rng.nonzero(1, 12));
        }
        const Rational lead = Rational(rng.nonzero(-20, 20)) / rng.nonzero(1, 5);
        std::vector<Rational> poly{lead};
        for (const auto& r : roots) {
            poly = oracle::multiply(poly, {-r, Rational(1)});
        }
        auto expected = roots;
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(rational_cubic_roots(poly[3], poly[2], poly[1], poly[0]) == expected);

        // one rational root times an irreducible quadratic x^2 - n, n not a square
        const long n = std::array<long, 5>{2, 3, 5, -1, 7}[static_cast<std::size_t>(trial % 5)];
        const auto mixed = oracle::multiply({-roots[0], Rational(1)}, {Rational(-n) * lead, Rational(0), lead});
        CHECK(rational_cubic_roots(mixed[3], mixed[2], mixed[1], mixed[0]) == std::vector<Rational>{roots[0]});
    }
}

TEST_CASE("two_torsion") {
    const auto t = two_torsion(CubicCurve(1, 0, -25, 0));
    CHECK(t == std::vector<CurvePoint>{{-5, 0}, {0, 0}, {5, 0}});
    CHECK(two_torsion(CubicCurve(1, 0, 0, 1)) == std::vector<CurvePoint>{{-1, 0}});
    CHECK(two_torsion(CubicCurve(1, 0, 0, -2)).empty());
    CHECK(has_full_two_torsion(CubicCurve(1, 0, -25, 0)));
    CHECK_FALSE(has_full_two_torsion(CubicCurve(1, 0, 0, 1)));
    CHECK(has_full_two_torsion(CubicCurve(-24, 44, -24, 4)));
    CHECK(two_torsion(CubicCurve(-24, 44, -24, 4)) ==
          std::vector<CurvePoint>{{Rational(1) / 3, 0}, {Rational(1) / 2, 0}, {1, 0}});

    // the sum of two distinct 2-torsion points is the third
    const auto model = cubic_to_weierstrass(CubicCurve(-24, 44, -24, 4));
    const auto t2 = two_torsion(CubicCurve(-24, 44, -24, 4));
    CHECK(add_points(model.curve, model.to_weierstrass(t2[0]), model.to_weierstrass(t2[1])) ==
          model.to_weierstrass(t2[2]));
}

TEST_CASE("shift_to_origin") {
    CHECK(shift_to_origin(CubicCurve(1, 0, -25, 0), {5, 0}) == CubicCurve(1, 15, 50, 0));
    CHECK(kind_of([] { (void)shift_to_origin(CubicCurve(1, 0, -25, 0), {1, 0}); }) == ErrorKind::PointNotOnCurve);
    CHECK(kind_of([] { (void)shift_to_origin(CubicCurve(1, 0, -25, 0), CurvePoint::infinity()); }) ==
          ErrorKind::PointNotOnCurve);

    const CubicCurve c(-24, 44, -24, 4);
    const auto j0 = weierstrass_j(cubic_to_weierstrass(c).curve);
    for (const auto& t : two_torsion(c)) {
        const auto shifted = shift_to_origin(c, t);
        CHECK(shifted.d() == Rational(0));
        CHECK(weierstrass_j(cubic_to_weierstrass(shifted).curve) == j0);
    }
}

TEST_CASE("is_torsion") {
    CHECK(is_torsion(congruent5(), {0, 0}));
    CHECK(is_torsion(congruent5(), CurvePoint::infinity()));
    CHECK_FALSE(is_torsion(congruent5(), {-4, 6}));
    const WeierstrassCurve e(0, 1);
    CHECK(is_torsion(e, {2, 3}));  // order 6
    CHECK(multiply(e, 6, {2, 3}).is_infinity());
    CHECK_FALSE(multiply(e, 3, {2, 3}).is_infinity());
    CHECK(is_torsion(e, {0, 1}));  // order 3
    CHECK(kind_of([&] { (void)is_torsion(e, {1, 1}); }) == ErrorKind::PointNotOnCurve);
}

TEST_CASE("weierstrass_j") {
    CHECK(weierstrass_j(WeierstrassCurve(1, 0)) == Rational(1728));
    CHECK(weierstrass_j(WeierstrassCurve(0, 1)) == Rational(0));
    CHECK(kind_of([] { (void)weierstrass_j(WeierstrassCurve::unchecked(-3, 2)); }) == ErrorKind::SingularCurve);
    oracle::Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational alpha = rng.uniform(-9, 9);
        const Rational beta = rng.uniform(-9, 9);
        const auto curve = WeierstrassCurve::unchecked(alpha, beta);
        if (curve.is_singular()) {
            continue;
        }
        const Rational lambda = Rational(rng.nonzero(-5, 5)) / rng.nonzero(1, 5);
        const WeierstrassCurve scaled(alpha * pow(lambda, 4), beta * pow(lambda, 6));
        CHECK(weierstrass_j(scaled) == weierstrass_j(curve));
    }
}
