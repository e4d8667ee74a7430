#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/hypermatrix.hpp"
#include "hyperbridge/invariants.hpp"

namespace hyperbridge {

/// The pair of equations sum_{j,k,l} a[i,j,k,l] z_j y_k x_l = 0, i = 0, 1,
/// with integer coefficients.
class TrilinearSystem {
public:
    /// Throws NonIntegerEntry if any coefficient is not an integer.
    explicit TrilinearSystem(Hypermatrix2222 a4);

    const Hypermatrix2222& coefficients() const { return a4_; }

private:
    Hypermatrix2222 a4_;
};

/// Projective solution with canonical integer representatives. `degenerate`
/// marks solutions drawn from a pencil where det M vanishes identically in y
/// or M vanishes outright, so the choice of y or z is arbitrary.
struct TrilinearSolution {
    Vector2 x;
    Vector2 y;
    Vector2 z;
    bool degenerate = false;

    friend bool operator==(const TrilinearSolution&, const TrilinearSolution&) = default;
    friend auto operator<=>(const TrilinearSolution&, const TrilinearSolution&) = default;
};

struct YZPair {
    Vector2 y;
    Vector2 z;
    bool degenerate = false;

    friend bool operator==(const YZPair&, const YZPair&) = default;
};

struct SearchReport {
    long bound = 0;
    std::vector<TrilinearSolution> solutions;
    std::uint64_t candidates_tested = 0;
    BinaryQuartic quartic;
    QuarticInvariants invariants;
    std::optional<Rational> J;        ///< absent when delta == 0
    bool degenerate_quartic = false;  ///< Q vanishes identically
};

/// Scales to coprime integers with the first nonzero entry positive.
/// Throws InvalidArgument for the zero vector.
Vector2 canonical_projective(const Vector2& v);

/// y-discriminant of det M(y, x) as a quartic in x, computed from the
/// matrix pencil and cross-checked against quartic_from_hypermatrix.
/// Throws InternalInconsistency if the two disagree.
BinaryQuartic reduce_to_quartic(const TrilinearSystem& sys);

/// Nonnegative square root when r is the square of a rational.
std::optional<Rational> is_rational_square(const Rational& r);

/// All (y, z) completing a given x. Empty when the y-discriminant is not a
/// rational square. Throws InvalidArgument for x == 0 and
/// InternalInconsistency if the pencil discriminant differs from cayley_det.
std::vector<YZPair> solve_given_x(const TrilinearSystem& sys, const Vector2& x);

bool verify_solution(const TrilinearSystem& sys, const TrilinearSolution& sol);

/// Canonical x candidates: (1, 0), then (x0, x1) with 1 <= x1 <= bound,
/// |x0| <= bound and gcd(x0, x1) == 1.
std::vector<Vector2> search_candidates(long bound);

/// Bounded search over the canonical x candidates. `threads` partitions the
/// candidate list; the report does not depend on it.
SearchReport search_solutions(const TrilinearSystem& sys, long bound, unsigned threads = 1);

/// Random system with entries drawn from [-9, 9] that admits (x, y, z).
/// For each i the pivot is the first (j, k, l) with the smallest nonzero
/// |z_j y_k x_l|; it is solved for exactly, re-sampling the slice until the
/// pivot is integral. Deterministic in the seed.
TrilinearSystem plant_solution(const Vector2& x, const Vector2& y, const Vector2& z, std::uint64_t seed);

/// Point of y^2 = Q(x, 1); at infinity, y^2 = A and y is the limit of y / x^2.
struct QuarticPoint {
    bool at_infinity = false;
    Rational x;
    Rational y;

    static QuarticPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
    static QuarticPoint infinity(Rational y) { return {true, Rational(0), std::move(y)}; }

    friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

bool on_quartic(const BinaryQuartic& q, const QuarticPoint& p);

/// Birational map from y^2 = Q(x, 1) to a cubic model, built around a known
/// rational point which is sent to the point at infinity.
class QuarticReduction {
public:
    const BinaryQuartic& quartic() const { return quartic_; }
    const CubicCurve& cubic() const { return cubic_; }
    const QuarticPoint& base() const { return base_; }

    /// Throws PointNotOnQuartic.
    CurvePoint forward(const QuarticPoint& p) const;

    /// Inverse map; nullopt only for points the inverse formula cannot reach.
    std::optional<QuarticPoint> backward(const CurvePoint& p) const;

private:
    friend QuarticReduction quartic_to_cubic(const BinaryQuartic& q, const QuarticPoint& base);

    struct ChartPoint {
        bool at_infinity;
        Rational x;
        Rational y;
    };

    QuarticReduction(BinaryQuartic q, QuarticPoint base, CubicCurve cubic)
        : quartic_(std::move(q)), base_(std::move(base)), cubic_(std::move(cubic)) {}

    ChartPoint to_chart(const QuarticPoint& p) const;
    QuarticPoint from_chart(const ChartPoint& p) const;

    BinaryQuartic quartic_;
    QuarticPoint base_;
    CubicCurve cubic_;

    // Chart: x' = x - x0 (or x' = 1/x when the base point is at infinity),
    // y'^2 = c4 x'^4 + c3 x'^3 + c2 x'^2 + c1 x' + w^2.
    bool reversed_ = false;
    Rational x0_;
    Rational c4_, c3_, c2_, c1_, w_;
    // Generalized Weierstrass coefficients when w != 0.
    Rational a1_, a2_, a3_;
};

/// Throws SingularQuartic when delta == 0 and PointNotOnQuartic when the base
/// point is not on the curve.
QuarticReduction quartic_to_cubic(const BinaryQuartic& q, const QuarticPoint& base);

}  // namespace hyperbridge
