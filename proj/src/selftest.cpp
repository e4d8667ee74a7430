#include "hyperbridge/selftest.hpp"

#include <algorithm>
#include <random>

#include "hyperbridge/bridge.hpp"
#include "hyperbridge/elliptic.hpp"
#include "hyperbridge/invariants.hpp"

namespace hyperbridge {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) {
            v = uniform(lo, hi);
        }
        return v;
    }

    template <std::size_t Rank>
    Hypermatrix<Rank> hypermatrix(long lo, long hi) {
        Hypermatrix<Rank> out;
        for (auto& e : out.entries()) {
            e = uniform(lo, hi);
        }
        return out;
    }

    // Product of elementary shears, so det == 1 by construction.
    Matrix2 unimodular() {
        Matrix2 g = Matrix2::identity();
        for (int i = 0; i < 3; ++i) {
            g = g * Matrix2{1, uniform(-2, 2), 0, 1};
            g = g * Matrix2{1, 0, uniform(-2, 2), 1};
        }
        return g;
    }

    template <std::size_t Rank>
    std::array<std::size_t, Rank> permutation() {
        std::array<std::size_t, Rank> perm{};
        for (std::size_t i = 0; i < Rank; ++i) {
            perm[i] = i;
        }
        std::shuffle(perm.begin(), perm.end(), rng_);
        return perm;
    }

private:
    std::mt19937_64 rng_;
};

SuiteResult sl2_suite(Sampler& rng, std::uint64_t iterations, bool inject_fault) {
    SuiteResult result{"sl2_invariance"};
    for (std::uint64_t it = 0; it < iterations; ++it) {
        const auto a4 = rng.hypermatrix<4>(-3, 3);
        auto moved = permute_axes(a4, rng.permutation<4>());
        for (std::size_t slot = 0; slot < 4; ++slot) {
            moved = apply_sl2(moved, slot, rng.unimodular());
        }
        const auto before = quartic_invariants(quartic_from_hypermatrix(a4));
        auto after = quartic_invariants(quartic_from_hypermatrix(moved));
        if (inject_fault) {
            after.T += 1;
        }
        bool ok = before.S == after.S && before.T == after.T && before.delta == after.delta;

        const auto a3 = rng.hypermatrix<3>(-3, 3);
        auto moved3 = permute_axes(a3, rng.permutation<3>());
        for (std::size_t slot = 0; slot < 3; ++slot) {
            moved3 = apply_sl2(moved3, slot, rng.unimodular());
        }
        ok = ok && cayley_det(a3) == cayley_det(moved3);
        (ok ? result.passed : result.failed) += 1;
    }
    return result;
}

SuiteResult discriminant_suite(Sampler& rng, std::uint64_t iterations) {
    SuiteResult result{"discriminant_repeated_root"};
    for (std::uint64_t it = 0; it < iterations; ++it) {
        BinaryQuartic q{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9),
                        rng.uniform(-9, 9)};
        if (q.is_zero()) {
            q.A = 1;
        }
        const bool zero_delta = quartic_invariants(q).delta.is_zero();
        (zero_delta == has_repeated_root(q) ? result.passed : result.failed) += 1;
    }
    return result;
}

SuiteResult bridge_suite(Sampler& rng, std::uint64_t iterations) {
    SuiteResult result{"bridge_round_trip"};
    for (std::uint64_t it = 0; it < iterations; ++it) {
        const BridgeParams bp{rng.nonzero(-5, 5), rng.nonzero(-5, 5), rng.nonzero(-5, 5),
                              rng.nonzero(-5, 5), rng.nonzero(-5, 5), rng.nonzero(-5, 5)};
        const UVCurve uv = params_to_uv(bp);
        const CubicCurve cubic = uv_to_cubic(uv);
        bool ok = cubic == bp.factored().expanded();
        ok = ok && uv.h == cubic.b() - uv.e * uv.e;
        // cubic_to_uv fixes g > 0; flipping the sign of (r, s, t) realizes it.
        const UVCurve canonical = uv.g.sign() > 0 ? uv : params_to_uv({bp.k, bp.m, bp.p, -bp.r, -bp.s, -bp.t});
        ok = ok && cubic_to_uv(cubic) == canonical;
        (ok ? result.passed : result.failed) += 1;
    }
    return result;
}

SuiteResult group_law_suite(Sampler& rng, std::uint64_t iterations) {
    SuiteResult result{"group_law"};
    const WeierstrassCurve curve(-25, 0);
    const CurvePoint generator(-4, 6);
    const std::array<CurvePoint, 4> torsion{CurvePoint::infinity(), CurvePoint(0, 0), CurvePoint(5, 0),
                                            CurvePoint(-5, 0)};
    const auto sample = [&] {
        const long n = rng.uniform(-3, 3);
        const auto t = static_cast<std::size_t>(rng.uniform(0, 3));
        return add_points(curve, multiply(curve, n, generator), torsion[t]);
    };
    for (std::uint64_t it = 0; it < iterations; ++it) {
        const CurvePoint p = sample();
        const CurvePoint q = sample();
        const CurvePoint r = sample();
        const CurvePoint pq = add_points(curve, p, q);
        bool ok = curve.contains(pq) && pq == add_points(curve, q, p);
        ok = ok && add_points(curve, pq, r) == add_points(curve, p, add_points(curve, q, r));
        ok = ok && add_points(curve, p, negate(p)).is_infinity();
        (ok ? result.passed : result.failed) += 1;
    }
    return result;
}

}  // namespace

SelftestSummary run_selftest(std::uint64_t iterations, std::uint64_t seed, bool inject_fault) {
    SelftestSummary summary;
    summary.iterations = iterations;
    summary.seed = seed;
    Sampler rng(seed);
    summary.suites.push_back(sl2_suite(rng, iterations, inject_fault));
    summary.suites.push_back(discriminant_suite(rng, iterations));
    summary.suites.push_back(bridge_suite(rng, iterations));
    summary.suites.push_back(group_law_suite(rng, iterations));
    return summary;
}

}  // namespace hyperbridge
