#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "golden/number.hpp"

namespace golden {

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dense exact vector over Q(√5). Storage is 0-based (operator[]); entry(i)
// uses the 1-based indexing of the eigenvector formulas. The same convention
// holds for GoldenMatrix below and is not repeated there.
class GoldenVector {
public:
    explicit GoldenVector(std::size_t n) : v_(checked_size(n)) {}
    explicit GoldenVector(std::vector<GoldenNumber> v) : v_(std::move(v)) {
        checked_size(v_.size());
    }

    std::size_t size() const { return v_.size(); }

    GoldenNumber& operator[](std::size_t i) { return v_[i]; }
    const GoldenNumber& operator[](std::size_t i) const { return v_[i]; }

    const GoldenNumber& entry(std::size_t i) const {
        if (i < 1 || i > v_.size()) {
            throw std::out_of_range("GoldenVector::entry: index " + std::to_string(i));
        }
        return v_[i - 1];
    }

    friend GoldenVector operator*(const GoldenNumber& c, const GoldenVector& v) {
        GoldenVector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
        return out;
    }

    friend bool operator==(const GoldenVector& a, const GoldenVector& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GoldenVector& a, const GoldenVector& b) { return !(a == b); }

private:
    static std::size_t checked_size(std::size_t n) {
        if (n == 0) throw std::invalid_argument("GoldenVector: size must be positive");
        return n;
    }

    std::vector<GoldenNumber> v_;
};

// Dense square matrix over Q(√5).
class GoldenMatrix {
public:
    explicit GoldenMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw std::invalid_argument("GoldenMatrix: order must be positive");
    }

    static GoldenMatrix identity(std::size_t n) {
        GoldenMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GoldenNumber(1);
        return m;
    }

    static GoldenMatrix diagonal(const std::vector<GoldenNumber>& d) {
        GoldenMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t order() const { return n_; }

    GoldenNumber& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const GoldenNumber& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    const GoldenNumber& entry(std::size_t i, std::size_t j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("GoldenMatrix::entry: index (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
        }
        return e_[(i - 1) * n_ + (j - 1)];
    }

    GoldenVector column(std::size_t c) const {
        GoldenVector out(n_);
        for (std::size_t r = 0; r < n_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    friend GoldenMatrix operator*(const GoldenMatrix& a, const GoldenMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("GoldenMatrix: order mismatch");
        GoldenMatrix out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const GoldenNumber& f = a(r, k);
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < a.n_; ++c) {
                    out(r, c) += f * b(k, c);
                }
            }
        }
        return out;
    }

    friend GoldenVector operator*(const GoldenMatrix& a, const GoldenVector& v) {
        if (a.n_ != v.size()) throw std::invalid_argument("GoldenMatrix: size mismatch");
        GoldenVector out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r) {
            GoldenNumber acc;
            for (std::size_t c = 0; c < a.n_; ++c) acc += a(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    friend bool operator==(const GoldenMatrix& a, const GoldenMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const GoldenMatrix& a, const GoldenMatrix& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<GoldenNumber> e_;  // row-major
};

// Exact determinant by Gaussian elimination over the field. Pivot choice is
// the first nonzero entry in column order; magnitude plays no role in exact
// arithmetic.
inline GoldenNumber det(const GoldenMatrix& m) {
    const std::size_t n = m.order();
    GoldenMatrix a = m;
    GoldenNumber result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return GoldenNumber(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            result = -result;
        }
        const GoldenNumber p = a(col, col);
        result *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const GoldenNumber f = a(r, col) / p;
            for (std::size_t c = col; c < n; ++c) {
                a(r, c) -= f * a(col, c);
            }
        }
    }
    return result;
}

// Exact inverse by Gauss–Jordan elimination. Throws SingularMatrixError when
// no pivot exists; the returned inverse is re-verified against the identity
// before being handed out.
inline GoldenMatrix invert(const GoldenMatrix& m) {
    const std::size_t n = m.order();
    GoldenMatrix a = m;
    GoldenMatrix inv = GoldenMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError("invert: singular matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const GoldenNumber p_inv = a(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= p_inv;
            inv(col, c) *= p_inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const GoldenNumber f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    if (m * inv != GoldenMatrix::identity(n)) {
        throw std::logic_error("invert: product with inverse is not the identity");
    }
    return inv;
}

}  // namespace golden
