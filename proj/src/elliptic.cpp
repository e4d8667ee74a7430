#include "hyperbridge/elliptic.hpp"

#include <algorithm>
#include <set>

#include "hyperbridge/error.hpp"

namespace hyperbridge {

std::string CurvePoint::str() const {
    if (is_infinity()) {
        return "O";
    }
    return "(" + x_.str() + ", " + y_.str() + ")";
}

WeierstrassCurve::WeierstrassCurve(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (is_singular()) {
        throw Error(ErrorKind::SingularCurve,
                    "y^2 = x^3 + (" + alpha_.str() + ")x + (" + beta_.str() + ") is singular");
    }
}

WeierstrassCurve WeierstrassCurve::unchecked(Rational alpha, Rational beta) {
    return WeierstrassCurve(Unchecked{}, std::move(alpha), std::move(beta));
}

Rational WeierstrassCurve::discriminant_term() const {
    return Rational(4) * alpha_ * alpha_ * alpha_ + Rational(27) * beta_ * beta_;
}

bool WeierstrassCurve::contains(const CurvePoint& p) const {
    if (p.is_infinity()) {
        return true;
    }
    const Rational& x = p.x();
    return p.y() * p.y() == (x * x + alpha_) * x + beta_;
}

void WeierstrassCurve::require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) {
        throw Error(ErrorKind::PointNotOnCurve, p.str() + " is not on y^2 = x^3 + (" + alpha_.str() + ")x + (" +
                                                    beta_.str() + ")");
    }
}

CurvePoint WeierstrassCurve::point(Rational x, Rational y) const {
    CurvePoint p(std::move(x), std::move(y));
    require_on_curve(p);
    return p;
}

CubicCurve::CubicCurve(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.is_zero()) {
        throw Error(ErrorKind::DegenerateCubic, "leading coefficient of the cubic is zero");
    }
}

bool CubicCurve::contains(const CurvePoint& p) const {
    return p.is_infinity() || p.y() * p.y() == rhs(p.x());
}

void CubicCurve::require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) {
        throw Error(ErrorKind::PointNotOnCurve, p.str() + " is not on the cubic curve");
    }
}

FactoredCurve::FactoredCurve(Rational k, Rational m, Rational p, Rational l, Rational n, Rational q)
    : k_(std::move(k)), m_(std::move(m)), p_(std::move(p)), l_(std::move(l)), n_(std::move(n)), q_(std::move(q)) {
    if ((k_ * m_ * p_).is_zero()) {
        throw Error(ErrorKind::DegenerateCubic, "factored curve needs k m p != 0");
    }
}

CubicCurve FactoredCurve::expanded() const {
    // 4 (l - kx)(n - mx)(q - px)
    return CubicCurve(Rational(-4) * k_ * m_ * p_, Rational(4) * (k_ * m_ * q_ + k_ * p_ * n_ + m_ * p_ * l_),
                      Rational(-4) * (k_ * n_ * q_ + m_ * l_ * q_ + p_ * l_ * n_), Rational(4) * l_ * n_ * q_);
}

CurvePoint WeierstrassModel::to_weierstrass(const CurvePoint& p) const {
    source.require_on_curve(p);
    if (p.is_infinity()) {
        return p;
    }
    return {source.a() * p.x() + source.b() / 3, source.a() * p.y()};
}

CurvePoint WeierstrassModel::from_weierstrass(const CurvePoint& p) const {
    curve.require_on_curve(p);
    if (p.is_infinity()) {
        return p;
    }
    return {(p.x() - source.b() / 3) / source.a(), p.y() / source.a()};
}

WeierstrassModel cubic_to_weierstrass(const CubicCurve& c) {
    // (a y)^2 = (a x)^3 + b (a x)^2 + a c (a x) + a^2 d, then X -> X - b/3.
    const Rational& a = c.a();
    const Rational& b = c.b();
    const Rational alpha = a * c.c() - b * b / 3;
    const Rational beta = Rational(2) * b * b * b / 27 - a * b * c.c() / 3 + a * a * c.d();
    return WeierstrassModel{c, WeierstrassCurve(alpha, beta)};
}

CurvePoint negate(const CurvePoint& p) {
    if (p.is_infinity()) {
        return p;
    }
    return {p.x(), -p.y()};
}

CurvePoint add_points(const WeierstrassCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    curve.require_on_curve(p);
    curve.require_on_curve(q);
    if (p.is_infinity()) {
        return q;
    }
    if (q.is_infinity()) {
        return p;
    }
    Rational slope;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y().is_zero()) {
            return CurvePoint::infinity();
        }
        slope = (Rational(3) * p.x() * p.x() + curve.alpha()) / (Rational(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = slope * slope - p.x() - q.x();
    Rational y3 = slope * (p.x() - x3) - p.y();
    return {std::move(x3), std::move(y3)};
}

CurvePoint multiply(const WeierstrassCurve& curve, long n, const CurvePoint& p) {
    curve.require_on_curve(p);
    CurvePoint base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc;
    while (k != 0) {
        if (k & 1UL) {
            acc = add_points(curve, acc, base);
        }
        k >>= 1U;
        if (k != 0) {
            base = add_points(curve, base, base);
        }
    }
    return acc;
}

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Integer roots of X^3 + p2 X^2 + p1 X + p0. The cubic is monotone outside
// the two critical points, so each monotone stretch is bisected over the
// integers and the few integers around the critical points are tested
// directly. Every real root lies within the Cauchy bound.
std::set<Integer> integer_roots_monic_cubic(const Integer& p2, const Integer& p1, const Integer& p0) {
    const auto f = [&](const Integer& x) -> Integer { return ((x + p2) * x + p1) * x + p0; };
    std::set<Integer> roots;

    const auto scan = [&](Integer lo, const Integer& hi) {
        for (; lo <= hi; ++lo) {
            if (f(lo) == 0) {
                roots.insert(lo);
            }
        }
    };
    const auto bisect = [&](Integer lo, Integer hi) {
        if (lo > hi) {
            return;
        }
        const int slo = sgn(f(lo));
        const int shi = sgn(f(hi));
        if (slo == 0) {
            roots.insert(lo);
        }
        if (shi == 0) {
            roots.insert(hi);
        }
        if (slo == 0 || shi == 0 || slo == shi) {
            return;
        }
        while (hi - lo > 1) {
            Integer mid = floor_div(lo + hi, 2);
            const int sm = sgn(f(mid));
            if (sm == 0) {
                roots.insert(mid);
                return;
            }
            (sm == slo ? lo : hi) = std::move(mid);
        }
    };

    Integer bound = 1;
    for (const Integer* c : {&p2, &p1, &p0}) {
        const Integer mag = abs(*c) + 1;
        if (mag > bound) {
            bound = mag;
        }
    }

    const Integer disc = p2 * p2 - 3 * p1;
    if (disc <= 0) {
        bisect(-bound, bound);
        return roots;
    }
    const Integer s = sqrt(disc);
    // crit1 in [(-p2 - s - 1)/3, (-p2 - s)/3], crit2 in [(-p2 + s)/3, (-p2 + s + 1)/3].
    const Integer i1 = floor_div(-p2 - s - 1, 3) - 1;
    const Integer j1 = ceil_div(-p2 - s, 3) + 1;
    const Integer i2 = floor_div(-p2 + s, 3) - 1;
    const Integer j2 = ceil_div(-p2 + s + 1, 3) + 1;
    bisect(-bound, std::min<Integer>(i1, bound));
    scan(i1, j1);
    bisect(j1, i2);
    scan(i2, j2);
    bisect(std::max<Integer>(j2, -bound), bound);
    return roots;
}

}  // namespace

std::vector<Rational> rational_cubic_roots(const Rational& a, const Rational& b, const Rational& c,
                                           const Rational& d) {
    if (a.is_zero()) {
        throw Error(ErrorKind::DegenerateCubic, "leading coefficient of the cubic is zero");
    }
    Integer common = 1;
    for (const Rational* r : {&a, &b, &c, &d}) {
        common = lcm(common, r->denominator());
    }
    const Integer c3 = (a * Rational(common)).numerator();
    const Integer c2 = (b * Rational(common)).numerator();
    const Integer c1 = (c * Rational(common)).numerator();
    const Integer c0 = (d * Rational(common)).numerator();

    // X = c3 x turns c3 x^3 + c2 x^2 + c1 x + c0 into a monic integer cubic.
    const auto roots = integer_roots_monic_cubic(c2, c1 * c3, c0 * c3 * c3);
    std::vector<Rational> out;
    out.reserve(roots.size());
    for (const auto& r : roots) {
        out.emplace_back(r, c3);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CurvePoint> two_torsion(const CubicCurve& c) {
    std::vector<CurvePoint> out;
    for (auto& x : rational_cubic_roots(c.a(), c.b(), c.c(), c.d())) {
        out.emplace_back(std::move(x), Rational(0));
    }
    return out;
}

bool has_full_two_torsion(const CubicCurve& c) { return two_torsion(c).size() == 3; }

CubicCurve shift_to_origin(const CubicCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) {
        throw Error(ErrorKind::PointNotOnCurve, "cannot shift the point at infinity to x = 0");
    }
    c.require_on_curve(p);
    const Rational& x0 = p.x();
    const Rational& a = c.a();
    const Rational& b = c.b();
    return CubicCurve(a, Rational(3) * a * x0 + b, Rational(3) * a * x0 * x0 + Rational(2) * b * x0 + c.c(),
                      c.rhs(x0));
}

bool is_torsion(const WeierstrassCurve& curve, const CurvePoint& p) {
    curve.require_on_curve(p);
    CurvePoint acc = p;
    for (int n = 1; n <= kMaxTorsionOrder; ++n) {
        if (acc.is_infinity()) {
            return true;
        }
        acc = add_points(curve, acc, p);
    }
    return false;
}

Rational weierstrass_j(const WeierstrassCurve& curve) {
    const Rational denom = curve.discriminant_term();
    if (denom.is_zero()) {
        throw Error(ErrorKind::SingularCurve, "j-invariant undefined for a singular curve");
    }
    return Rational(1728) * Rational(4) * curve.alpha() * curve.alpha() * curve.alpha() / denom;
}

}  // namespace hyperbridge
