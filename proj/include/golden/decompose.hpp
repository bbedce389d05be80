#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "golden/eigen.hpp"
#include "golden/matrix.hpp"
#include "golden/pascal.hpp"

namespace golden {

/**
 * Exact diagonalization R = U·diag(λ)·U⁻¹, where column j of U is the
 * eigenvector u_j. The eigenvalues are pairwise distinct, which is what
 * makes U invertible; spectral_decompose re-checks the recomposition before
 * returning, so a constructed value always satisfies the factorization
 * exactly.
 */
struct SpectralDecomposition {
    std::size_t n = 0;
    GoldenMatrix eigenvectors;          // U
    std::vector<GoldenNumber> eigenvalues;
    GoldenMatrix eigenvectors_inverse;  // U⁻¹
};

inline SpectralDecomposition spectral_decompose(std::size_t n) {
    detail::check_order(n);
    GoldenMatrix u = eigenvector_matrix(n);
    std::vector<GoldenNumber> lambdas;
    lambdas.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) lambdas.push_back(eigenvalue(n, j));
    GoldenMatrix u_inv = invert(u);  // SingularMatrixError here is unreachable
    if (u * GoldenMatrix::diagonal(lambdas) * u_inv != lift(BinomialMatrix(n))) {
        throw std::logic_error("spectral_decompose: recomposition does not equal R");
    }
    return SpectralDecomposition{n, std::move(u), std::move(lambdas), std::move(u_inv)};
}

// R^m as U·diag(λ^m)·U⁻¹. Every entry of the product must land back in the
// integers; a non-integral entry means the decomposition is wrong and is
// reported as a logic error rather than truncated.
inline IntMatrix matrix_power_spectral(const SpectralDecomposition& d, unsigned long m) {
    std::vector<GoldenNumber> powers;
    powers.reserve(d.n);
    for (const GoldenNumber& lambda : d.eigenvalues) {
        powers.push_back(pow(lambda, static_cast<long>(m)));
    }
    const GoldenMatrix product =
        d.eigenvectors * GoldenMatrix::diagonal(powers) * d.eigenvectors_inverse;
    IntMatrix out(d.n);
    for (std::size_t r = 0; r < d.n; ++r) {
        for (std::size_t c = 0; c < d.n; ++c) {
            const GoldenNumber& e = product(r, c);
            if (e.phi_part() != 0 || !is_integer(e.rational_part())) {
                throw std::logic_error("matrix_power_spectral: non-integral entry at (" +
                                       std::to_string(r + 1) + ", " + std::to_string(c + 1) +
                                       "): " + e.str());
            }
            out(r, c) = e.rational_part().get_num();
        }
    }
    return out;
}

inline IntMatrix matrix_power_spectral(std::size_t n, unsigned long m) {
    return matrix_power_spectral(spectral_decompose(n), m);
}

}  // namespace golden
