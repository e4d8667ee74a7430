#include "hyperbridge/rational.hpp"

#include "hyperbridge/error.hpp"

namespace hyperbridge {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonUnimodular: return "NonUnimodular";
        case ErrorKind::ZeroQuartic: return "ZeroQuartic";
        case ErrorKind::SingularCurve: return "SingularCurve";
        case ErrorKind::DegenerateCubic: return "DegenerateCubic";
        case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorKind::DegenerateParams: return "DegenerateParams";
        case ErrorKind::NotCubic: return "NotCubic";
        case ErrorKind::NotASquare: return "NotASquare";
        case ErrorKind::ZeroG: return "ZeroG";
        case ErrorKind::VZero: return "VZero";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::NoAssignmentFound: return "NoAssignmentFound";
        case ErrorKind::NonIntegerEntry: return "NonIntegerEntry";
        case ErrorKind::PointNotOnQuartic: return "PointNotOnQuartic";
        case ErrorKind::SingularQuartic: return "SingularQuartic";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_decimal_integer(s)) {
        throw Error(ErrorKind::MalformedInput, "malformed integer '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw Error(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

std::optional<Integer> integer_sqrt(const Integer& n) {
    if (n < 0) {
        return std::nullopt;
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Integer(sqrt(n));
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    const auto num = integer_sqrt(r.numerator());
    if (!num) {
        return std::nullopt;
    }
    const auto den = integer_sqrt(r.denominator());
    if (!den) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

}  // namespace hyperbridge
