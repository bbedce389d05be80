#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "golden/eigen.hpp"

using golden::BigRational;
using golden::GoldenNumber;
using golden::GoldenPoly;
using golden::GoldenVector;

namespace {

const GoldenNumber kPhi = GoldenNumber::phi();
const GoldenNumber kPsi = GoldenNumber::psi();

GoldenNumber gn(long x, long y) {
    return GoldenNumber(BigRational(x), BigRational(y));
}

}  // namespace

TEST_CASE("eigenvalues", "[eigen]") {
    CHECK(golden::eigenvalue(1, 1) == gn(1, 0));
    CHECK(golden::eigenvalue(2, 2) == kPhi);
    CHECK(golden::eigenvalue(3, 1) == gn(2, -1));  // φ⁻² = 2 − φ
    CHECK(golden::eigenvalue(2, 1) == kPsi);       // −φ⁻¹ = 1 − φ
    CHECK_THROWS_AS(golden::eigenvalue(3, 0), std::out_of_range);
    CHECK_THROWS_AS(golden::eigenvalue(3, 4), std::out_of_range);
}

TEST_CASE("eigenvalue of the Fibonacci matrix satisfies its characteristic polynomial",
          "[eigen]") {
    // For n = 2 the matrix is [[0,1],[1,1]] with χ(λ) = λ² − λ − 1.
    for (std::size_t j = 1; j <= 2; ++j) {
        const GoldenNumber lambda = golden::eigenvalue(2, j);
        CHECK(lambda * lambda - lambda - GoldenNumber(1) == GoldenNumber(0));
    }
}

TEST_CASE("eigenvector entries", "[eigen]") {
    CHECK(golden::eigenvector_entry(1, 1, 1) == gn(1, 0));
    CHECK(golden::eigenvector_entry(2, 2, 1) == gn(1, -1));  // 1 − φ
    CHECK(golden::eigenvector_entry(2, 1, 2) == gn(1, 0));
    CHECK(golden::eigenvector_entry(2, 2, 2) == kPhi);
    CHECK_THROWS_AS(golden::eigenvector_entry(2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(golden::eigenvector_entry(2, 1, 3), std::out_of_range);
}

TEST_CASE("eigenvectors", "[eigen]") {
    const GoldenVector u11 = golden::eigenvector(1, 1);
    CHECK(u11.entry(1) == gn(1, 0));

    const GoldenVector u21 = golden::eigenvector(2, 1);
    CHECK(u21.entry(1) == gn(1, 0));
    CHECK(u21.entry(2) == gn(1, -1));

    const GoldenVector u22 = golden::eigenvector(2, 2);
    CHECK(u22.entry(1) == gn(1, 0));
    CHECK(u22.entry(2) == kPhi);
}

TEST_CASE("generating polynomials", "[eigen]") {
    CHECK(golden::generating_polynomial(1, 1) == GoldenPoly::z());
    CHECK(golden::generating_polynomial(2, 1) ==
          GoldenPoly{GoldenNumber(0), GoldenNumber(1), GoldenNumber(1)});  // z + z²
    CHECK(golden::generating_polynomial(2, 2) ==
          GoldenPoly{GoldenNumber(0), kPsi, kPhi});  // ψz + φz²
    CHECK_THROWS_AS(golden::generating_polynomial(2, 3), std::out_of_range);
}

TEST_CASE("generating polynomial shape", "[eigen][property]") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            const GoldenPoly u = golden::generating_polynomial(n, i);
            REQUIRE(u.degree() == n);
            CHECK(u.coeff(0).is_zero());
        }
    }
}

TEST_CASE("row action forms at small orders", "[eigen]") {
    const GoldenPoly psi_phi{GoldenNumber(0), kPsi, kPhi};  // ψz + φz²
    CHECK(golden::row_action_poly(2, 1) == psi_phi);
    CHECK(golden::row_action_poly(1, 1) == GoldenPoly::z());
    CHECK(golden::row_action_poly(2, 2) ==
          GoldenPoly{GoldenNumber(0), GoldenNumber(1) + kPsi, GoldenNumber(1) + kPhi});

    CHECK(golden::row_action_regrouped(1, 1) == GoldenPoly::z());
    CHECK(golden::row_action_regrouped(2, 1) == psi_phi);
    CHECK(golden::row_action_regrouped(2, 2) == golden::row_action_poly(2, 2));

    CHECK(golden::row_action_closed(2, 1) == psi_phi);
    CHECK(golden::row_action_closed(1, 1) == GoldenPoly::z());
    CHECK(golden::row_action_closed(2, 2) ==
          GoldenPoly::z() * GoldenPoly{GoldenNumber(1) + kPsi, GoldenNumber(1) + kPhi});
}

TEST_CASE("eigen scaling forms at small orders", "[eigen]") {
    const GoldenPoly psi_phi{GoldenNumber(0), kPsi, kPhi};
    CHECK(golden::eigen_scaled_poly(2, 1) == psi_phi);
    CHECK(golden::eigen_scaled_poly(1, 1) == GoldenPoly::z());
    CHECK(golden::eigen_scaled_poly(2, 2) == golden::row_action_poly(2, 2));

    CHECK(golden::eigen_scaled_expanded(1, 1) == GoldenPoly::z());
    CHECK(golden::eigen_scaled_expanded(2, 1) == psi_phi);
    CHECK(golden::eigen_scaled_expanded(3, 2) == golden::eigen_scaled_poly(3, 2));

    CHECK(golden::eigen_scaled_closed(1, 1) == GoldenPoly::z());
    CHECK(golden::eigen_scaled_closed(2, 1) == psi_phi);
    const GoldenNumber phi_inv = kPhi.inverse();
    CHECK(golden::eigen_scaled_closed(2, 2) ==
          GoldenPoly::z() * GoldenPoly{-(kPsi * phi_inv), kPhi * kPhi});
    CHECK(golden::eigen_scaled_closed(2, 2) == golden::row_action_closed(2, 2));
}

TEST_CASE("all six forms agree at moderate orders", "[eigen][property]") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            const GoldenPoly base = golden::row_action_poly(n, i);
            CHECK(golden::row_action_regrouped(n, i) == base);
            CHECK(golden::row_action_closed(n, i) == base);
            CHECK(golden::eigen_scaled_poly(n, i) == base);
            CHECK(golden::eigen_scaled_expanded(n, i) == base);
            CHECK(golden::eigen_scaled_closed(n, i) == base);
        }
    }
}

TEST_CASE("generating polynomial coefficients are the eigenvector entries",
          "[eigen][property]") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            const GoldenPoly u = golden::generating_polynomial(n, i);
            for (std::size_t j = 1; j <= n; ++j) {
                CHECK(u.coeff(j) == golden::eigenvector_entry(n, i, j));
            }
        }
    }
}

TEST_CASE("eigenvector matrix", "[eigen]") {
    const golden::GoldenMatrix u1 = golden::eigenvector_matrix(1);
    CHECK(u1.entry(1, 1) == gn(1, 0));

    const golden::GoldenMatrix u2 = golden::eigenvector_matrix(2);
    CHECK(u2.entry(1, 1) == gn(1, 0));
    CHECK(u2.entry(1, 2) == gn(1, 0));
    CHECK(u2.entry(2, 1) == gn(1, -1));
    CHECK(u2.entry(2, 2) == kPhi);

    // Column 2 of the 3×3 matrix agrees with the eigenvector op and with the
    // generating-function coefficients.
    const golden::GoldenMatrix u3 = golden::eigenvector_matrix(3);
    const GoldenVector col = golden::eigenvector(3, 2);
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(u3.entry(i, 2) == col.entry(i));
        CHECK(u3.entry(i, 2) == golden::generating_polynomial(3, i).coeff(2));
    }
}

TEST_CASE("corrupted constants break the identities", "[eigen]") {
    golden::Constants bad;
    bad.phi += GoldenNumber(1);
    // The regrouping and substitution steps are constant-agnostic...
    CHECK(golden::row_action_regrouped(3, 2, bad) == golden::row_action_poly(3, 2, bad));
    CHECK(golden::row_action_closed(3, 2, bad) == golden::row_action_poly(3, 2, bad));
    CHECK(golden::eigen_scaled_expanded(3, 2, bad) == golden::eigen_scaled_poly(3, 2, bad));
    // ...but the bridge between the two chains only holds for the true roots.
    CHECK(golden::eigen_scaled_closed(3, 2, bad) != golden::row_action_closed(3, 2, bad));
    CHECK(golden::generating_polynomial(3, 2, bad).coeff(2) !=
          golden::eigenvector_entry(3, 2, 2, bad));
}
