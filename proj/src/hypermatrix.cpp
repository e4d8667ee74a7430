#include "hyperbridge/hypermatrix.hpp"

#include "hyperbridge/error.hpp"

namespace hyperbridge {

Matrix2 Matrix2::inverse() const {
    const Rational d = det();
    if (d.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "singular 2x2 matrix has no inverse");
    }
    return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Hypermatrix222 contract_last(const Hypermatrix2222& a4, const Vector2& x) {
    Hypermatrix222 out;
    auto dst = out.entries();
    const auto src = a4.entries();
    for (std::size_t pos = 0; pos < Hypermatrix222::kSize; ++pos) {
        dst[pos] = src[2 * pos] * x.c0 + src[2 * pos + 1] * x.c1;
    }
    return out;
}

Matrix2 contract_last(const Hypermatrix222& b, const Vector2& y) {
    const auto e = b.entries();
    return {e[0] * y.c0 + e[1] * y.c1, e[2] * y.c0 + e[3] * y.c1,
            e[4] * y.c0 + e[5] * y.c1, e[6] * y.c0 + e[7] * y.c1};
}

Matrix2 contract_to_matrix(const Hypermatrix2222& a4, const Vector2& y, const Vector2& x) {
    Matrix2 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Rational acc;
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    acc += a4[{i, j, k, l}] * y[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(l)];
                }
            }
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
        }
    }
    return m;
}

template <std::size_t Rank>
Hypermatrix<Rank> apply_sl2(const Hypermatrix<Rank>& a, std::size_t slot, const Matrix2& g) {
    if (slot >= Rank) {
        throw Error(ErrorKind::InvalidArgument, "slot index out of range");
    }
    if (g.det() != Rational(1)) {
        throw Error(ErrorKind::NonUnimodular, "slot transform must have determinant 1, got " + g.det().str());
    }
    Hypermatrix<Rank> out;
    for (std::size_t pos = 0; pos < Hypermatrix<Rank>::kSize; ++pos) {
        auto idx = Hypermatrix<Rank>::unflatten(pos);
        const auto row = static_cast<std::size_t>(idx[slot]);
        Rational acc;
        for (int i = 0; i < 2; ++i) {
            idx[slot] = i;
            acc += g(row, static_cast<std::size_t>(i)) * a[idx];
        }
        out.entries()[pos] = acc;
    }
    return out;
}

template <std::size_t Rank>
Hypermatrix<Rank> permute_axes(const Hypermatrix<Rank>& a, const std::array<std::size_t, Rank>& perm) {
    std::array<bool, Rank> seen{};
    for (const auto p : perm) {
        if (p >= Rank || seen[p]) {
            throw Error(ErrorKind::InvalidArgument, "not a permutation of the axes");
        }
        seen[p] = true;
    }
    Hypermatrix<Rank> out;
    for (std::size_t pos = 0; pos < Hypermatrix<Rank>::kSize; ++pos) {
        const auto idx = Hypermatrix<Rank>::unflatten(pos);
        typename Hypermatrix<Rank>::Index moved{};
        for (std::size_t axis = 0; axis < Rank; ++axis) {
            moved[perm[axis]] = idx[axis];
        }
        out[moved] = a.entries()[pos];
    }
    return out;
}

template Hypermatrix<3> apply_sl2<3>(const Hypermatrix<3>&, std::size_t, const Matrix2&);
template Hypermatrix<4> apply_sl2<4>(const Hypermatrix<4>&, std::size_t, const Matrix2&);
template Hypermatrix<3> permute_axes<3>(const Hypermatrix<3>&, const std::array<std::size_t, 3>&);
template Hypermatrix<4> permute_axes<4>(const Hypermatrix<4>&, const std::array<std::size_t, 4>&);

}  // namespace hyperbridge
