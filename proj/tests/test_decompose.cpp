#include <catch2/catch_amalgamated.hpp>

#include "golden/decompose.hpp"

using golden::GoldenMatrix;
using golden::GoldenNumber;
using golden::IntMatrix;
using golden::SpectralDecomposition;

TEST_CASE("spectral decomposition at small orders", "[decompose]") {
    const SpectralDecomposition d1 = golden::spectral_decompose(1);
    CHECK(d1.eigenvalues.size() == 1);
    CHECK(d1.eigenvalues[0] == GoldenNumber(1));
    CHECK(d1.eigenvectors == GoldenMatrix::identity(1));
    CHECK(d1.eigenvectors_inverse == GoldenMatrix::identity(1));

    const SpectralDecomposition d2 = golden::spectral_decompose(2);
    const GoldenMatrix recomposed =
        d2.eigenvectors * GoldenMatrix::diagonal(d2.eigenvalues) * d2.eigenvectors_inverse;
    CHECK(recomposed == golden::lift(golden::BinomialMatrix(2)));
    CHECK(d2.eigenvectors * d2.eigenvectors_inverse == GoldenMatrix::identity(2));
}

TEST_CASE("spectral decomposition recomposes exactly at order 12", "[decompose]") {
    const SpectralDecomposition d = golden::spectral_decompose(12);
    const GoldenMatrix recomposed =
        d.eigenvectors * GoldenMatrix::diagonal(d.eigenvalues) * d.eigenvectors_inverse;
    CHECK(recomposed == golden::lift(golden::BinomialMatrix(12)));
    CHECK(d.eigenvectors * d.eigenvectors_inverse == GoldenMatrix::identity(12));
    CHECK_FALSE(golden::det(d.eigenvectors).is_zero());
}

TEST_CASE("matrix powers through the decomposition", "[decompose]") {
    const IntMatrix sq = golden::matrix_power_spectral(2, 2);
    CHECK(sq.entry(1, 1) == 1);
    CHECK(sq.entry(1, 2) == 1);
    CHECK(sq.entry(2, 1) == 1);
    CHECK(sq.entry(2, 2) == 2);

    CHECK(golden::matrix_power_spectral(4, 0) == IntMatrix::identity(4));

    const IntMatrix fib = golden::matrix_power_spectral(2, 5);
    CHECK(fib.entry(1, 1) == 3);
    CHECK(fib.entry(1, 2) == 5);
    CHECK(fib.entry(2, 1) == 5);
    CHECK(fib.entry(2, 2) == 8);
}

TEST_CASE("spectral and direct powers agree", "[decompose][property]") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const SpectralDecomposition d = golden::spectral_decompose(n);
        for (unsigned long m = 0; m <= 8; ++m) {
            INFO("n = " << n << ", m = " << m);
            CHECK(golden::matrix_power_spectral(d, m) == golden::matrix_power_direct(n, m));
        }
    }
}
