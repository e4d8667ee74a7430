#include "hyperbridge/trilinear.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>

#include "hyperbridge/error.hpp"

namespace hyperbridge {

TrilinearSystem::TrilinearSystem(Hypermatrix2222 a4) : a4_(std::move(a4)) {
    for (const auto& e : a4_.entries()) {
        if (!e.is_integer()) {
            throw Error(ErrorKind::NonIntegerEntry, "trilinear coefficients must be integers, got " + e.str());
        }
    }
}

Vector2 canonical_projective(const Vector2& v) {
    if (v.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "zero vector has no projective representative");
    }
    const Integer common = lcm(v.c0.denominator(), v.c1.denominator());
    Integer n0 = (v.c0 * Rational(common)).numerator();
    Integer n1 = (v.c1 * Rational(common)).numerator();
    const Integer content = gcd(n0, n1);
    n0 /= content;
    n1 /= content;
    if (n0 < 0 || (n0 == 0 && n1 < 0)) {
        n0 = -n0;
        n1 = -n1;
    }
    return {Rational(n0), Rational(n1)};
}

namespace {

struct PencilQuadratic {
    Rational alpha;  // y0^2
    Rational beta;   // y0 y1
    Rational gamma;  // y1^2

    Rational discriminant() const { return beta * beta - Rational(4) * alpha * gamma; }
    bool is_zero() const { return alpha.is_zero() && beta.is_zero() && gamma.is_zero(); }
};

// det(y0 M0 + y1 M1) as a quadratic form in y, where M_k = b[., ., k].
PencilQuadratic pencil_of(const Hypermatrix222& b) {
    const Matrix2 m0 = contract_last(b, Vector2{1, 0});
    const Matrix2 m1 = contract_last(b, Vector2{0, 1});
    PencilQuadratic out;
    out.alpha = m0.det();
    out.gamma = m1.det();
    const Matrix2 sum{m0.m00 + m1.m00, m0.m01 + m1.m01, m0.m10 + m1.m10, m0.m11 + m1.m11};
    out.beta = sum.det() - out.alpha - out.gamma;
    return out;
}

Vector2 kernel_vector(const Matrix2& m) {
    if (!m.m00.is_zero() || !m.m01.is_zero()) {
        return {-m.m01, m.m00};
    }
    return {-m.m11, m.m10};
}

}  // namespace

BinaryQuartic reduce_to_quartic(const TrilinearSystem& sys) {
    std::array<Rational, 5> values;
    for (std::size_t i = 0; i < kInterpolationNodes.size(); ++i) {
        const auto& node = kInterpolationNodes[i];
        values[i] = pencil_of(contract_last(sys.coefficients(), Vector2{node[0], node[1]})).discriminant();
    }
    BinaryQuartic q = interpolate_quartic(values);
    if (q != quartic_from_hypermatrix(sys.coefficients())) {
        throw Error(ErrorKind::InternalInconsistency, "pencil discriminant disagrees with Cayley's hyperdeterminant");
    }
    return q;
}

std::optional<Rational> is_rational_square(const Rational& r) { return rational_sqrt(r); }

std::vector<YZPair> solve_given_x(const TrilinearSystem& sys, const Vector2& x) {
    if (x.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "x must be nonzero");
    }
    const Hypermatrix222 b = contract_last(sys.coefficients(), x);
    const PencilQuadratic pencil = pencil_of(b);
    const Rational disc = pencil.discriminant();
    if (disc != cayley_det(b)) {
        throw Error(ErrorKind::InternalInconsistency, "pencil discriminant disagrees with Cayley's hyperdeterminant");
    }

    std::vector<Vector2> ys;
    const bool degenerate_pencil = pencil.is_zero();
    if (degenerate_pencil) {
        ys = {{1, 0}, {0, 1}};
    } else {
        const auto root = is_rational_square(disc);
        if (!root) {
            return {};
        }
        if (!pencil.alpha.is_zero()) {
            const Rational twice_alpha = Rational(2) * pencil.alpha;
            ys.push_back(canonical_projective({-pencil.beta + *root, twice_alpha}));
            ys.push_back(canonical_projective({-pencil.beta - *root, twice_alpha}));
        } else {
            // y1 (beta y0 + gamma y1) = 0
            ys.push_back({1, 0});
            if (!pencil.beta.is_zero()) {
                ys.push_back(canonical_projective({-pencil.gamma, pencil.beta}));
            }
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    }

    std::vector<YZPair> out;
    for (const auto& y : ys) {
        const Matrix2 m = contract_last(b, y);
        if (m.is_zero()) {
            out.push_back({y, {1, 0}, true});
        } else {
            out.push_back({y, canonical_projective(kernel_vector(m)), degenerate_pencil});
        }
    }
    return out;
}

bool verify_solution(const TrilinearSystem& sys, const TrilinearSolution& sol) {
    if (sol.x.is_zero() || sol.y.is_zero() || sol.z.is_zero()) {
        return false;
    }
    const Matrix2 m = contract_to_matrix(sys.coefficients(), sol.y, sol.x);
    const Vector2 residual = m * sol.z;
    return residual.is_zero();
}

std::vector<Vector2> search_candidates(long bound) {
    std::vector<Vector2> out;
    if (bound < 1) {
        return out;
    }
    out.push_back({1, 0});
    for (long x1 = 1; x1 <= bound; ++x1) {
        for (long x0 = -bound; x0 <= bound; ++x0) {
            if (std::gcd(x0, x1) == 1) {
                out.push_back({x0, x1});
            }
        }
    }
    return out;
}

namespace {

std::vector<TrilinearSolution> search_range(const TrilinearSystem& sys, const BinaryQuartic& quartic,
                                            std::span<const Vector2> candidates) {
    std::vector<TrilinearSolution> found;
    for (const auto& x : candidates) {
        const Rational value = quartic(x.c0, x.c1);
        if (!integer_sqrt(value.numerator())) {
            continue;
        }
        const Vector2 cx = canonical_projective(x);
        for (const auto& pair : solve_given_x(sys, x)) {
            TrilinearSolution sol{cx, pair.y, pair.z, pair.degenerate};
            if (!verify_solution(sys, sol)) {
                throw Error(ErrorKind::InternalInconsistency, "search produced an unverifiable solution");
            }
            found.push_back(std::move(sol));
        }
    }
    return found;
}

}  // namespace

SearchReport search_solutions(const TrilinearSystem& sys, long bound, unsigned threads) {
    if (bound < 1) {
        throw Error(ErrorKind::InvalidArgument, "search bound must be at least 1");
    }
    SearchReport report;
    report.bound = bound;
    report.quartic = reduce_to_quartic(sys);
    report.invariants = quartic_invariants(report.quartic);
    if (!report.invariants.delta.is_zero()) {
        report.J = j_invariant(report.quartic);
    }
    report.degenerate_quartic = report.quartic.is_zero();

    const std::vector<Vector2> candidates = search_candidates(bound);
    report.candidates_tested = candidates.size();

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, candidates.size()));
    const std::size_t chunk = (candidates.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<TrilinearSolution>>> parts;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
        const std::span<const Vector2> slice(candidates.data() + begin, std::min(chunk, candidates.size() - begin));
        parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                   [&sys, &report, slice] { return search_range(sys, report.quartic, slice); }));
    }
    std::set<TrilinearSolution> merged;
    for (auto& part : parts) {
        for (auto& sol : part.get()) {
            merged.insert(std::move(sol));
        }
    }
    report.solutions.assign(merged.begin(), merged.end());
    return report;
}

TrilinearSystem plant_solution(const Vector2& x, const Vector2& y, const Vector2& z, std::uint64_t seed) {
    if (x.is_zero() || y.is_zero() || z.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "planted vectors must be nonzero");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    constexpr int kMaxResamples = 10000;

    Hypermatrix2222 a4;
    for (int i = 0; i < 2; ++i) {
        // weight[pos] = z_j y_k x_l for pos = (j, k, l) in flat order.
        std::array<Rational, 8> weight;
        for (std::size_t pos = 0; pos < 8; ++pos) {
            const auto idx = Hypermatrix222::unflatten(pos);
            weight[pos] = z[static_cast<std::size_t>(idx[0])] * y[static_cast<std::size_t>(idx[1])] *
                          x[static_cast<std::size_t>(idx[2])];
        }
        std::size_t pivot = 8;
        for (std::size_t pos = 0; pos < 8; ++pos) {
            if (!weight[pos].is_zero() && (pivot == 8 || weight[pos].abs() < weight[pivot].abs())) {
                pivot = pos;
            }
        }

        std::array<Rational, 8> slice;
        bool solved = false;
        Rational residual;
        for (int attempt = 0; attempt < kMaxResamples && !solved; ++attempt) {
            residual = 0;
            for (std::size_t pos = 0; pos < 8; ++pos) {
                slice[pos] = entry(rng);
                if (pos != pivot) {
                    residual += slice[pos] * weight[pos];
                }
            }
            slice[pivot] = -residual / weight[pivot];
            solved = slice[pivot].is_integer();
        }
        if (!solved) {
            // Scale the free entries so the pivot equation clears exactly.
            const Rational scale(Integer(residual.denominator() * weight[pivot].numerator()));
            for (std::size_t pos = 0; pos < 8; ++pos) {
                slice[pos] *= scale;
            }
            slice[pivot] = -residual * scale / weight[pivot];
        }
        for (std::size_t pos = 0; pos < 8; ++pos) {
            a4.entries()[static_cast<std::size_t>(i) * 8 + pos] = slice[pos];
        }
    }
    return TrilinearSystem(std::move(a4));
}

bool on_quartic(const BinaryQuartic& q, const QuarticPoint& p) {
    if (p.at_infinity) {
        return p.y * p.y == q.A;
    }
    return p.y * p.y == q(p.x, Rational(1));
}

QuarticReduction::ChartPoint QuarticReduction::to_chart(const QuarticPoint& p) const {
    if (!reversed_) {
        if (p.at_infinity) {
            return {true, Rational(0), p.y};
        }
        return {false, p.x - x0_, p.y};
    }
    if (p.at_infinity) {
        return {false, Rational(0), p.y};
    }
    if (p.x.is_zero()) {
        return {true, Rational(0), p.y};
    }
    return {false, p.x.inverse(), p.y / (p.x * p.x)};
}

QuarticPoint QuarticReduction::from_chart(const ChartPoint& p) const {
    if (!reversed_) {
        if (p.at_infinity) {
            return QuarticPoint::infinity(p.y);
        }
        return QuarticPoint::affine(p.x + x0_, p.y);
    }
    if (p.at_infinity) {
        return QuarticPoint::affine(Rational(0), p.y);
    }
    if (p.x.is_zero()) {
        return QuarticPoint::infinity(p.y);
    }
    return QuarticPoint::affine(p.x.inverse(), p.y / (p.x * p.x));
}

CurvePoint QuarticReduction::forward(const QuarticPoint& p) const {
    if (!on_quartic(quartic_, p)) {
        throw Error(ErrorKind::PointNotOnQuartic, "point does not satisfy y^2 = Q(x, 1)");
    }
    const ChartPoint cp = to_chart(p);
    CurvePoint out;
    if (!w_.is_zero()) {
        Rational X;
        Rational Y;
        if (!cp.at_infinity && cp.x.is_zero()) {
            if (cp.y == w_) {
                return CurvePoint::infinity();
            }
            X = -a2_;
            Y = a1_ * a2_ - a3_;
        } else if (cp.at_infinity) {
            X = Rational(2) * w_ * cp.y;
            Y = 0;
        } else {
            const Rational& u = cp.x;
            const Rational& q = w_;
            const Rational shifted = cp.y + q;
            X = (Rational(2) * q * shifted + c1_ * u) / (u * u);
            Y = (Rational(4) * q * q * shifted + Rational(2) * q * (c1_ * u + c2_ * u * u) -
                 c1_ * c1_ * u * u / (Rational(2) * q)) /
                (u * u * u);
        }
        out = CurvePoint(X, Y + (a1_ * X + a3_) / 2);
    } else {
        if (!cp.at_infinity && cp.x.is_zero()) {
            return CurvePoint::infinity();
        }
        if (cp.at_infinity) {
            out = CurvePoint(Rational(0), cp.y);
        } else {
            out = CurvePoint(cp.x.inverse(), cp.y / (cp.x * cp.x));
        }
    }
    if (!cubic_.contains(out)) {
        throw Error(ErrorKind::InternalInconsistency, "reduced point " + out.str() + " is off the cubic model");
    }
    return out;
}

std::optional<QuarticPoint> QuarticReduction::backward(const CurvePoint& p) const {
    cubic_.require_on_curve(p);
    if (p.is_infinity()) {
        return base_;
    }
    ChartPoint cp{false, Rational(0), Rational(0)};
    if (!w_.is_zero()) {
        const Rational& q = w_;
        const Rational& X = p.x();
        const Rational Y = p.y() - (a1_ * X + a3_) / 2;
        if (X == -a2_ && Y == a1_ * a2_ - a3_) {
            cp = {false, Rational(0), -q};
        } else if (Y.is_zero()) {
            const Rational limit = X / (Rational(2) * q);
            if (limit * limit != c4_) {
                return std::nullopt;
            }
            cp = {true, Rational(0), limit};
        } else {
            const Rational u = (Rational(2) * q * (X + c2_) - c1_ * c1_ / (Rational(2) * q)) / Y;
            cp = {false, u, -q + u * (u * X - c1_) / (Rational(2) * q)};
        }
    } else {
        if (p.x().is_zero()) {
            cp = {true, Rational(0), p.y()};
        } else {
            cp = {false, p.x().inverse(), p.y() / (p.x() * p.x())};
        }
    }
    QuarticPoint out = from_chart(cp);
    if (!on_quartic(quartic_, out)) {
        throw Error(ErrorKind::InternalInconsistency, "inverse image is off the quartic");
    }
    return out;
}

QuarticReduction quartic_to_cubic(const BinaryQuartic& q, const QuarticPoint& base) {
    if (quartic_invariants(q).delta.is_zero()) {
        throw Error(ErrorKind::SingularQuartic, "quartic has a repeated root");
    }
    if (!on_quartic(q, base)) {
        throw Error(ErrorKind::PointNotOnQuartic, "base point does not satisfy y^2 = Q(x, 1)");
    }

    // Chart coefficients, highest degree first.
    std::array<Rational, 5> chart;
    bool reversed = false;
    Rational x0;
    if (base.at_infinity) {
        reversed = true;
        chart = {q.E, q.D, q.C, q.B, q.A};
    } else {
        // Taylor shift of Q(x, 1) to x = x0 + X.
        x0 = base.x;
        const std::array<Rational, 5> coeffs{q.E, q.D, q.C, q.B, q.A};  // ascending
        constexpr std::array<std::array<int, 5>, 5> binom{{{1, 0, 0, 0, 0},
                                                           {1, 1, 0, 0, 0},
                                                           {1, 2, 1, 0, 0},
                                                           {1, 3, 3, 1, 0},
                                                           {1, 4, 6, 4, 1}}};
        for (std::size_t k = 0; k < 5; ++k) {
            Rational acc;
            for (std::size_t n = k; n < 5; ++n) {
                acc += coeffs[n] * Rational(binom[n][k]) * pow(x0, static_cast<unsigned>(n - k));
            }
            chart[4 - k] = acc;
        }
    }
    const Rational& c4 = chart[0];
    const Rational& c3 = chart[1];
    const Rational& c2 = chart[2];
    const Rational& c1 = chart[3];
    const Rational& w = base.y;

    Rational a1;
    Rational a2;
    Rational a3;
    std::optional<CubicCurve> cubic;
    if (!w.is_zero()) {
        // y^2 = c4 X^4 + c3 X^3 + c2 X^2 + c1 X + w^2 is carried to
        // Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6, then the square is completed.
        a1 = c1 / w;
        a2 = c2 - c1 * c1 / (Rational(4) * w * w);
        a3 = Rational(2) * w * c3;
        const Rational a4 = Rational(-4) * w * w * c4;
        const Rational a6 = a2 * a4;
        cubic.emplace(Rational(1), a2 + a1 * a1 / 4, a4 + a1 * a3 / 2, a6 + a3 * a3 / 4);
    } else {
        // x0 is a simple root: s = 1/X, Y = y / X^2 gives Y^2 = c1 s^3 + c2 s^2 + c3 s + c4.
        cubic.emplace(c1, c2, c3, c4);
    }

    QuarticReduction out(q, base, *cubic);
    out.reversed_ = reversed;
    out.x0_ = x0;
    out.c4_ = c4;
    out.c3_ = c3;
    out.c2_ = c2;
    out.c1_ = c1;
    out.w_ = w;
    out.a1_ = a1;
    out.a2_ = a2;
    out.a3_ = a3;
    return out;
}

}  // namespace hyperbridge
