#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hyperbridge/rational.hpp"

namespace hyperbridge {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    struct DivMod;
    /// Euclidean division; throws DivisionByZero for a zero divisor.
    DivMod divmod(const UPoly& divisor) const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct UPoly::DivMod {
    UPoly quotient;
    UPoly remainder;
};

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

/// Sparse polynomial with integer coefficients in a fixed number of
/// variables. Used for exact symbolic identity checks of small polynomials.
template <std::size_t Vars>
class SparsePoly {
public:
    using Exponents = std::array<std::uint8_t, Vars>;

    SparsePoly() = default;
    SparsePoly(long constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) {
            terms_[Exponents{}] = constant;
        }
    }

    static SparsePoly variable(std::size_t index) {
        SparsePoly p;
        Exponents e{};
        e[index] = 1;
        p.terms_[e] = 1;
        return p;
    }

    const std::map<Exponents, Integer>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    SparsePoly& operator+=(const SparsePoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (std::size_t i = 0; i < Vars; ++i) {
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    SparsePoly operator-() const { return SparsePoly{} - *this; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponents& e, const Integer& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
        }
        if (it->second == 0) {
            terms_.erase(it);
        }
    }

    std::map<Exponents, Integer> terms_;
};

}  // namespace hyperbridge
