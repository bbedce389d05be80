#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden/number.hpp"

namespace golden {

/**
 * Univariate polynomial in z with GoldenNumber coefficients, stored densely:
 * index j holds the coefficient of z^j. Canonical form trims trailing zero
 * coefficients; the zero polynomial stores nothing and has no degree.
 */
class GoldenPoly {
public:
    GoldenPoly() = default;  // zero polynomial
    GoldenPoly(std::initializer_list<GoldenNumber> cs) : coeffs_(cs) { trim(); }
    explicit GoldenPoly(std::vector<GoldenNumber> cs) : coeffs_(std::move(cs)) { trim(); }

    static GoldenPoly zero() { return GoldenPoly(); }
    static GoldenPoly one() { return GoldenPoly{GoldenNumber(1)}; }
    static GoldenPoly z() { return GoldenPoly{GoldenNumber(0), GoldenNumber(1)}; }
    static GoldenPoly constant(GoldenNumber c) { return GoldenPoly{std::move(c)}; }

    // c·z^j
    static GoldenPoly monomial(GoldenNumber c, std::size_t j) {
        std::vector<GoldenNumber> cs(j + 1);
        cs[j] = std::move(c);
        return GoldenPoly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    // Coefficient of z^j; zero beyond the degree.
    GoldenNumber coeff(std::size_t j) const {
        return j < coeffs_.size() ? coeffs_[j] : GoldenNumber(0);
    }

    const std::vector<GoldenNumber>& coefficients() const { return coeffs_; }

    friend GoldenPoly operator+(const GoldenPoly& p, const GoldenPoly& q) {
        std::vector<GoldenNumber> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = p.coeff(j) + q.coeff(j);
        return GoldenPoly(std::move(out));
    }

    friend GoldenPoly operator-(const GoldenPoly& p) {
        std::vector<GoldenNumber> out(p.coeffs_.size());
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = -p.coeffs_[j];
        return GoldenPoly(std::move(out));
    }

    friend GoldenPoly operator-(const GoldenPoly& p, const GoldenPoly& q) { return p + (-q); }

    // Exact convolution product.
    friend GoldenPoly operator*(const GoldenPoly& p, const GoldenPoly& q) {
        if (p.is_zero() || q.is_zero()) return GoldenPoly();
        std::vector<GoldenNumber> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t a = 0; a < p.coeffs_.size(); ++a) {
            if (p.coeffs_[a].is_zero()) continue;
            for (std::size_t b = 0; b < q.coeffs_.size(); ++b) {
                out[a + b] += p.coeffs_[a] * q.coeffs_[b];
            }
        }
        return GoldenPoly(std::move(out));
    }

    friend GoldenPoly operator*(const GoldenPoly& p, const GoldenNumber& c) {
        std::vector<GoldenNumber> out(p.coeffs_.size());
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = p.coeffs_[j] * c;
        return GoldenPoly(std::move(out));
    }
    friend GoldenPoly operator*(const GoldenNumber& c, const GoldenPoly& p) { return p * c; }

    GoldenPoly& operator+=(const GoldenPoly& q) { return *this = *this + q; }
    GoldenPoly& operator-=(const GoldenPoly& q) { return *this = *this - q; }
    GoldenPoly& operator*=(const GoldenPoly& q) { return *this = *this * q; }
    GoldenPoly& operator*=(const GoldenNumber& c) { return *this = *this * c; }

    // Substitution z ↦ c·z: coefficient j picks up a factor c^j.
    GoldenPoly scale_arg(const GoldenNumber& c) const {
        std::vector<GoldenNumber> out(coeffs_.size());
        GoldenNumber power(1);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            out[j] = coeffs_[j] * power;
            power *= c;
        }
        return GoldenPoly(std::move(out));
    }

    friend bool operator==(const GoldenPoly& p, const GoldenPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const GoldenPoly& p, const GoldenPoly& q) { return !(p == q); }

    // "c0 + c1·z + c2·z^2 + …", zero coefficients skipped, two-term
    // coefficients parenthesized.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const GoldenNumber& c = coeffs_[j];
            if (c.is_zero()) continue;
            std::string cs = c.str();
            const bool compound = cs.find(' ') != std::string::npos;
            bool negative = false;
            if (compound) {
                cs = "(" + cs + ")";
            } else if (cs[0] == '-') {
                negative = true;
                cs = cs.substr(1);
            }
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (j == 0) {
                out += cs;
            } else {
                if (cs == "1") {
                    cs.clear();
                } else {
                    cs += "·";
                }
                out += cs + (j == 1 ? "z" : "z^" + std::to_string(j));
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const GoldenPoly& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GoldenNumber> coeffs_;
};

// Exact nonnegative power by repeated squaring; pow(p, 0) == 1 for every p.
inline GoldenPoly pow(const GoldenPoly& base, long exponent) {
    if (exponent < 0) {
        throw std::domain_error("GoldenPoly: negative exponent");
    }
    GoldenPoly b = base;
    GoldenPoly result = GoldenPoly::one();
    auto e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace golden
