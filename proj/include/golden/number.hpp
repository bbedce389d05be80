#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "golden/rational.hpp"

namespace golden {

/**
 * Element of the quadratic field Q(√5), stored in the basis {1, φ} where
 * φ = (1+√5)/2 satisfies φ² = φ + 1. A value is x + y·φ with exact
 * rational coordinates, and equality is componentwise equality of the
 * canonical coordinates. The multiplication rule follows from the single
 * defining relation:
 *
 *     (x₁ + y₁φ)(x₂ + y₂φ) = (x₁x₂ + y₁y₂) + (x₁y₂ + x₂y₁ + y₁y₂)φ
 *
 * Values with integer coordinates form the subring Z[φ]; since φ is a unit
 * there, all powers of φ (negative ones included) stay integer-coordinate.
 * Instances are immutable in practice: all operations return new values.
 */
class GoldenNumber {
public:
    GoldenNumber() : x_(0), y_(0) {}
    GoldenNumber(long v) : x_(v), y_(0) {}  // NOLINT: implicit for literals
    explicit GoldenNumber(BigInt v) : x_(std::move(v)), y_(0) {}
    explicit GoldenNumber(BigRational x) : x_(canonical(std::move(x))), y_(0) {}
    GoldenNumber(BigRational x, BigRational y)
        : x_(canonical(std::move(x))), y_(canonical(std::move(y))) {}

    // The golden ratio φ = (1+√5)/2, i.e. the coordinate pair (0, 1).
    static GoldenNumber phi() { return GoldenNumber(BigRational(0), BigRational(1)); }
    // The conjugate root ψ = (1−√5)/2 = 1 − φ, i.e. (1, −1).
    static GoldenNumber psi() { return GoldenNumber(BigRational(1), BigRational(-1)); }
    // √5 = 2φ − 1.
    static GoldenNumber sqrt5() { return GoldenNumber(BigRational(-1), BigRational(2)); }

    const BigRational& rational_part() const { return x_; }
    const BigRational& phi_part() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    // True when the value lies in Z[φ] (both coordinates are integers).
    bool is_integral() const { return is_integer(x_) && is_integer(y_); }

    friend GoldenNumber operator+(const GoldenNumber& p, const GoldenNumber& q) {
        return raw(p.x_ + q.x_, p.y_ + q.y_);
    }
    friend GoldenNumber operator-(const GoldenNumber& p, const GoldenNumber& q) {
        return raw(p.x_ - q.x_, p.y_ - q.y_);
    }
    friend GoldenNumber operator-(const GoldenNumber& p) { return raw(-p.x_, -p.y_); }

    friend GoldenNumber operator*(const GoldenNumber& p, const GoldenNumber& q) {
        // φ² = φ + 1 folds the cross term back into the basis.
        return raw(p.x_ * q.x_ + p.y_ * q.y_,
                   p.x_ * q.y_ + q.x_ * p.y_ + p.y_ * q.y_);
    }

    friend GoldenNumber operator/(const GoldenNumber& p, const GoldenNumber& q) {
        return p * q.inverse();
    }

    GoldenNumber& operator+=(const GoldenNumber& q) { return *this = *this + q; }
    GoldenNumber& operator-=(const GoldenNumber& q) { return *this = *this - q; }
    GoldenNumber& operator*=(const GoldenNumber& q) { return *this = *this * q; }
    GoldenNumber& operator/=(const GoldenNumber& q) { return *this = *this / q; }

    // Galois conjugation √5 ↦ −√5, equivalently φ ↦ ψ: x + yφ ↦ (x+y) − yφ.
    // Involution and ring homomorphism.
    GoldenNumber conjugate() const { return raw(x_ + y_, -y_); }

    // Field norm N(x + yφ) = (x + yφ)(x + yψ) = x² + xy − y². Multiplicative,
    // zero only at zero.
    BigRational norm() const { return canonical(x_ * x_ + x_ * y_ - y_ * y_); }

    GoldenNumber inverse() const {
        if (is_zero()) {
            throw std::domain_error("GoldenNumber: division by zero");
        }
        const BigRational n = norm();
        GoldenNumber c = conjugate();
        return raw(c.x_ / n, c.y_ / n);
    }

    friend bool operator==(const GoldenNumber& p, const GoldenNumber& q) {
        return p.x_ == q.x_ && p.y_ == q.y_;
    }
    friend bool operator!=(const GoldenNumber& p, const GoldenNumber& q) { return !(p == q); }

    // Display-only decimal value; never used in comparisons.
    double approx() const {
        static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
        return x_.get_d() + y_.get_d() * kPhi;
    }

    // "x + y·φ" with reduced rationals; "0" for zero, the φ term carries an
    // explicit coefficient ("1·φ", "-2/3·φ").
    std::string str() const {
        if (is_zero()) return "0";
        if (y_ == 0) return to_string(x_);
        std::string phi_term = to_string(abs(y_)) + "·φ";
        if (x_ == 0) {
            return (y_ < 0 ? "-" : "") + phi_term;
        }
        return to_string(x_) + (y_ < 0 ? " - " : " + ") + phi_term;
    }

    static GoldenNumber parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& p) {
        return os << p.str();
    }

private:
    // Arithmetic on canonical mpq values stays canonical; skip re-reduction.
    static GoldenNumber raw(BigRational x, BigRational y) {
        GoldenNumber p;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    BigRational x_;  // coefficient of 1
    BigRational y_;  // coefficient of φ
};

// Exact power with a possibly negative exponent, by repeated squaring.
// pow(p, -e) == pow(p, e).inverse(); zero base with negative exponent throws.
inline GoldenNumber pow(const GoldenNumber& base, long exponent) {
    GoldenNumber b = base;
    unsigned long long e;
    if (exponent < 0) {
        b = base.inverse();
        e = 0ULL - static_cast<unsigned long long>(exponent);
    } else {
        e = static_cast<unsigned long long>(exponent);
    }
    GoldenNumber result(1);
    while (e > 0) {
        if (e & 1ULL) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// One term of the textual form: a rational, "φ", or "rational·φ".
inline GoldenNumber parse_term(const std::string& term) {
    static const std::string kPhiSuffix = "·φ";  // "·φ"
    static const std::string kPhiGlyph = "φ";
    std::string t = trim(term);
    if (t.empty()) {
        throw std::invalid_argument("GoldenNumber::parse: empty term");
    }
    bool phi_term = false;
    if (t.size() >= kPhiSuffix.size() &&
        t.compare(t.size() - kPhiSuffix.size(), kPhiSuffix.size(), kPhiSuffix) == 0) {
        phi_term = true;
        t = trim(t.substr(0, t.size() - kPhiSuffix.size()));
    } else if (t == kPhiGlyph || t == "-" + kPhiGlyph) {
        return GoldenNumber(BigRational(0), BigRational(t[0] == '-' ? -1 : 1));
    }
    BigRational coeff = parse_rational(t);
    return phi_term ? GoldenNumber(BigRational(0), coeff) : GoldenNumber(coeff);
}

}  // namespace detail

inline GoldenNumber GoldenNumber::parse(const std::string& text) {
    const std::string s = detail::trim(text);
    if (s.empty()) {
        throw std::invalid_argument("GoldenNumber::parse: empty input");
    }
    // Split at a top-level '+'/'-' that separates the two terms. The sign of
    // the first term is part of its rational, so start scanning at 1.
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != '+' && s[i] != '-') continue;
        if (s[i - 1] == '/' || s[i - 1] == '+' || s[i - 1] == '-') continue;  // inner sign
        GoldenNumber lhs = detail::parse_term(s.substr(0, i));
        GoldenNumber rhs = detail::parse_term(s.substr(i + 1));
        return s[i] == '+' ? lhs + rhs : lhs - rhs;
    }
    return detail::parse_term(s);
}

}  // namespace golden
