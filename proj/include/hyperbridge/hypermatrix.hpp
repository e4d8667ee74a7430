#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "hyperbridge/rational.hpp"

namespace hyperbridge {

struct Vector2 {
    Rational c0;
    Rational c1;

    const Rational& operator[](std::size_t i) const { return i == 0 ? c0 : c1; }
    Rational& operator[](std::size_t i) { return i == 0 ? c0 : c1; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    friend bool operator==(const Vector2&, const Vector2&) = default;
    friend auto operator<=>(const Vector2&, const Vector2&) = default;
};

/// 2x2 matrix, row-major: (m00 m01; m10 m11).
struct Matrix2 {
    Rational m00;
    Rational m01;
    Rational m10;
    Rational m11;

    static Matrix2 identity() { return {1, 0, 0, 1}; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return i == 0 ? (j == 0 ? m00 : m01) : (j == 0 ? m10 : m11);
    }
    Rational& operator()(std::size_t i, std::size_t j) {
        return i == 0 ? (j == 0 ? m00 : m01) : (j == 0 ? m10 : m11);
    }

    Rational det() const { return m00 * m11 - m01 * m10; }
    bool is_zero() const { return m00.is_zero() && m01.is_zero() && m10.is_zero() && m11.is_zero(); }

    /// Throws DivisionByZero when singular.
    Matrix2 inverse() const;

    Vector2 operator*(const Vector2& v) const { return {m00 * v.c0 + m01 * v.c1, m10 * v.c0 + m11 * v.c1}; }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Hypermatrix of shape 2x...x2 (Rank axes).
///
/// Entries live in a flat array in lexicographic index order with the last
/// index varying fastest, so for rank 3 the flat positions 0..7 are the
/// corners a=(0,0,0), b=(0,0,1), c=(0,1,0), d=(0,1,1), e=(1,0,0),
/// f=(1,0,1), g=(1,1,0), h=(1,1,1).
template <std::size_t Rank>
class Hypermatrix {
public:
    static constexpr std::size_t kRank = Rank;
    static constexpr std::size_t kSize = std::size_t{1} << Rank;
    using Index = std::array<int, Rank>;

    Hypermatrix() = default;
    explicit Hypermatrix(std::array<Rational, kSize> entries) : entries_(std::move(entries)) {}

    static constexpr std::size_t flat(const Index& idx) {
        std::size_t out = 0;
        for (std::size_t axis = 0; axis < Rank; ++axis) {
            out = (out << 1U) | static_cast<std::size_t>(idx[axis] & 1);
        }
        return out;
    }

    static constexpr Index unflatten(std::size_t pos) {
        Index idx{};
        for (std::size_t axis = Rank; axis-- > 0;) {
            idx[axis] = static_cast<int>(pos & 1U);
            pos >>= 1U;
        }
        return idx;
    }

    const Rational& operator[](const Index& idx) const { return entries_[flat(idx)]; }
    Rational& operator[](const Index& idx) { return entries_[flat(idx)]; }

    std::span<const Rational, kSize> entries() const { return entries_; }
    std::span<Rational, kSize> entries() { return entries_; }

    Hypermatrix scaled(const Rational& factor) const {
        Hypermatrix out = *this;
        for (auto& e : out.entries_) {
            e *= factor;
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Hypermatrix&, const Hypermatrix&) = default;

private:
    std::array<Rational, kSize> entries_{};
};

using Hypermatrix222 = Hypermatrix<3>;
using Hypermatrix2222 = Hypermatrix<4>;

/// Corner letters of a 2x2x2 hypermatrix, valued by flat position.
enum class Corner : std::size_t { a = 0, b, c, d, e, f, g, h };

/// b[i,j,k] = sum_l a4[i,j,k,l] x_l.
Hypermatrix222 contract_last(const Hypermatrix2222& a4, const Vector2& x);

/// M[i,j] = sum_k b[i,j,k] y_k.
Matrix2 contract_last(const Hypermatrix222& b, const Vector2& y);

/// M[i,j] = sum_{k,l} a4[i,j,k,l] y_k x_l.
Matrix2 contract_to_matrix(const Hypermatrix2222& a4, const Vector2& y, const Vector2& x);

/// Acts on one axis: a'[.., i', ..] = sum_i g(i', i) a[.., i, ..].
/// Throws NonUnimodular unless det(g) == 1.
template <std::size_t Rank>
Hypermatrix<Rank> apply_sl2(const Hypermatrix<Rank>& a, std::size_t slot, const Matrix2& g);

/// Moves axis p of the input to axis perm[p] of the output.
/// Throws InvalidArgument if perm is not a permutation of 0..Rank-1.
template <std::size_t Rank>
Hypermatrix<Rank> permute_axes(const Hypermatrix<Rank>& a, const std::array<std::size_t, Rank>& perm);

}  // namespace hyperbridge
