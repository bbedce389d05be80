#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "golden/matrix.hpp"
#include "golden/rational.hpp"

namespace golden {

// C(m, k), exact; zero for k outside [0, m].
inline BigInt binomial(unsigned long m, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > m) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), m, static_cast<unsigned long>(k));
    return out;
}

// Dense square matrix of exact integers.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw std::invalid_argument("IntMatrix: order must be positive");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t order() const { return n_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    // 1-based, matching the row/column convention of the formulas.
    const BigInt& entry(std::size_t i, std::size_t j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw std::out_of_range("IntMatrix::entry: index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
        }
        return e_[(i - 1) * n_ + (j - 1)];
    }

    BigInt trace() const {
        BigInt t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: order mismatch");
        IntMatrix out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const BigInt& f = a(r, k);
                if (f == 0) continue;
                for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += f * b(k, c);
            }
        }
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<BigInt> e_;  // row-major
};

/**
 * The n×n binomial matrix with entry(i, j) = C(i−1, n−j) in 1-based indexing.
 * Entries above the antidiagonal vanish (n−j > i−1), the last column is all
 * ones, and the n = 2 instance is the Fibonacci matrix [[0,1],[1,1]].
 */
class BinomialMatrix {
public:
    explicit BinomialMatrix(std::size_t n) : m_(checked_order(n)) {
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                m_(i - 1, j - 1) = binomial(i - 1, static_cast<long>(n) - static_cast<long>(j));
            }
        }
    }

    std::size_t order() const { return m_.order(); }
    const BigInt& entry(std::size_t i, std::size_t j) const { return m_.entry(i, j); }
    const IntMatrix& matrix() const { return m_; }
    BigInt trace() const { return m_.trace(); }

private:
    static std::size_t checked_order(std::size_t n) {
        if (n == 0) throw std::invalid_argument("BinomialMatrix: order must be positive");
        return n;
    }

    IntMatrix m_;
};

inline GoldenMatrix lift(const IntMatrix& m) {
    GoldenMatrix out(m.order());
    for (std::size_t r = 0; r < m.order(); ++r) {
        for (std::size_t c = 0; c < m.order(); ++c) {
            out(r, c) = GoldenNumber(m(r, c));
        }
    }
    return out;
}

inline GoldenMatrix lift(const BinomialMatrix& m) { return lift(m.matrix()); }

// R^m by m-fold exact multiplication; the reference route that the spectral
// power is checked against.
inline IntMatrix matrix_power_direct(std::size_t n, unsigned long m) {
    const BinomialMatrix r(n);
    IntMatrix acc = IntMatrix::identity(n);
    for (unsigned long s = 0; s < m; ++s) acc = acc * r.matrix();
    return acc;
}

}  // namespace golden
