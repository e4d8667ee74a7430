#include "hyperbridge/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "hyperbridge/error.hpp"

namespace hyperbridge {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    const Rational lead = leading();
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) {
        c /= lead;
    }
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) + b.coeff(i);
    }
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) - b.coeff(i);
    }
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UPoly(std::move(out));
}

UPoly::DivMod UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    std::vector<Rational> rem = coeffs_;
    const auto dd = static_cast<std::size_t>(divisor.degree());
    if (rem.size() <= dd) {
        return {UPoly{}, *this};
    }
    std::vector<Rational> quot(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Rational factor = rem[i] / divisor.leading();
        quot[i - dd] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= factor * divisor.coeffs_[j];
        }
    }
    rem.resize(dd);
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace hyperbridge
