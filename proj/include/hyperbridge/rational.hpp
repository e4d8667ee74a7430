#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperbridge {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that every
/// operation leaves the value canonicalized and so that division by zero
/// raises an Error instead of aborting inside GMP.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p" or "p/q" (q != 0). The result is canonicalized.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

/// Exact integer square root; nullopt unless n is a perfect square (n >= 0).
std::optional<Integer> integer_sqrt(const Integer& n);

/// Nonnegative rational square root; nullopt unless numerator and
/// denominator are both perfect squares.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace hyperbridge
