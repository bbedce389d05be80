#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "golden/matrix.hpp"
#include "golden/number.hpp"
#include "golden/pascal.hpp"
#include "golden/poly.hpp"

namespace golden {

/**
 * The pair of conjugate roots of x² = x + 1 that every closed form below is
 * built from. All public entry points default to the genuine pair (φ, ψ);
 * the struct exists so verification can be driven with a deliberately
 * corrupted constant and be seen to fail.
 */
struct Constants {
    GoldenNumber phi = GoldenNumber::phi();
    GoldenNumber psi = GoldenNumber::psi();

    static Constants standard() { return Constants{}; }
};

namespace detail {

inline void check_order(std::size_t n) {
    if (n == 0) throw std::invalid_argument("order n must be positive");
}

inline void check_index(std::size_t n, std::size_t idx, const char* what) {
    check_order(n);
    if (idx < 1 || idx > n) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(idx) +
                                " out of range 1.." + std::to_string(n));
    }
}

inline GoldenNumber sign(long e) { return (e % 2 == 0) ? GoldenNumber(1) : GoldenNumber(-1); }

}  // namespace detail

// λ_j = (−1)^{n+j} φ^{2j−n−1}, 1 ≤ j ≤ n.
inline GoldenNumber eigenvalue(std::size_t n, std::size_t j,
                               const Constants& k = Constants::standard()) {
    detail::check_index(n, j, "eigenvalue");
    const long nn = static_cast<long>(n), jj = static_cast<long>(j);
    return detail::sign(nn + jj) * pow(k.phi, 2 * jj - nn - 1);
}

// u_ij = Σ_{s=1}^{j} (−1)^{i−s} C(i−1, s−1) C(n−i, j−s) φ^{2s−i−1}.
// The sum index is written s here: the source formula reuses j for it, which
// this form disambiguates.
inline GoldenNumber eigenvector_entry(std::size_t n, std::size_t i, std::size_t j,
                                      const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    detail::check_index(n, j, "eigenvector");
    const long nn = static_cast<long>(n), ii = static_cast<long>(i), jj = static_cast<long>(j);
    GoldenNumber acc;
    GoldenNumber phi_power = pow(k.phi, 2 - ii - 1);  // φ^{2s−i−1} at s = 1
    const GoldenNumber phi_sq = k.phi * k.phi;
    for (long s = 1; s <= jj; ++s) {
        const BigInt c = binomial(static_cast<unsigned long>(ii - 1), s - 1) *
                         binomial(static_cast<unsigned long>(nn - ii), jj - s);
        if (c != 0) {
            acc += detail::sign(ii - s) * GoldenNumber(c) * phi_power;
        }
        phi_power *= phi_sq;
    }
    return acc;
}

// u_j = (u_ij)_{1 ≤ i ≤ n}.
inline GoldenVector eigenvector(std::size_t n, std::size_t j,
                                const Constants& k = Constants::standard()) {
    detail::check_index(n, j, "eigenvector");
    GoldenVector u(n);
    for (std::size_t i = 1; i <= n; ++i) u[i - 1] = eigenvector_entry(n, i, j, k);
    return u;
}

// U_i(z) = z (1+z)^{n−i} (φz + ψ)^{i−1}; its z^j coefficient is u_ij, so it
// has degree exactly n and no constant term.
inline GoldenPoly generating_polynomial(std::size_t n, std::size_t i,
                                        const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenPoly one_plus_z{GoldenNumber(1), GoldenNumber(1)};
    const GoldenPoly root_factor{k.psi, k.phi};  // ψ + φz
    return GoldenPoly::z() * pow(one_plus_z, static_cast<long>(n - i)) *
           pow(root_factor, static_cast<long>(i - 1));
}

// Row i of R applied to the generating functions: Σ_k C(i−1, n−k) U_k(z).
// Its z^j coefficient is (R u_j)_i.
inline GoldenPoly row_action_poly(std::size_t n, std::size_t i,
                                  const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    GoldenPoly acc;
    for (std::size_t col = 1; col <= n; ++col) {
        const BigInt c = binomial(i - 1, static_cast<long>(n) - static_cast<long>(col));
        if (c == 0) continue;
        acc += generating_polynomial(n, col, k) * GoldenNumber(c);
    }
    return acc;
}

// The row sum after swapping the summation index and pulling out common
// factors: z (φz+ψ)^{n−i} Σ_{s=0}^{i−1} C(i−1, s) (1+z)^s (φz+ψ)^{i−1−s}.
// The leading z restores the degree shift of the [z^{j−1}] extraction, so
// all six row polynomials compare directly.
inline GoldenPoly row_action_regrouped(std::size_t n, std::size_t i,
                                       const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenPoly one_plus_z{GoldenNumber(1), GoldenNumber(1)};
    const GoldenPoly root_factor{k.psi, k.phi};
    GoldenPoly sum;
    for (std::size_t s = 0; s < i; ++s) {
        sum += GoldenNumber(binomial(i - 1, static_cast<long>(s))) *
               pow(one_plus_z, static_cast<long>(s)) *
               pow(root_factor, static_cast<long>(i - 1 - s));
    }
    return GoldenPoly::z() * pow(root_factor, static_cast<long>(n - i)) * sum;
}

// Binomial theorem applied to the regrouped sum:
// z (φz+ψ)^{n−i} ((1+ψ) + (1+φ)z)^{i−1}.
inline GoldenPoly row_action_closed(std::size_t n, std::size_t i,
                                    const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenPoly root_factor{k.psi, k.phi};
    const GoldenPoly merged{GoldenNumber(1) + k.psi, GoldenNumber(1) + k.phi};
    return GoldenPoly::z() * pow(root_factor, static_cast<long>(n - i)) *
           pow(merged, static_cast<long>(i - 1));
}

// Generating function of (λ_j u_j)_i over j: (−1)^n φ^{−n−1} U_i(−φ²z),
// computed by substitution into U_i.
inline GoldenPoly eigen_scaled_poly(std::size_t n, std::size_t i,
                                    const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenNumber scalar =
        detail::sign(static_cast<long>(n)) * pow(k.phi, -static_cast<long>(n) - 1);
    const GoldenNumber minus_phi_sq = -(k.phi * k.phi);
    return generating_polynomial(n, i, k).scale_arg(minus_phi_sq) * scalar;
}

// The same substitution with U_i's factors expanded first:
// (−1)^n φ^{−n−1} (−φ²z) (1 − φ²z)^{n−i} (ψ − φ³z)^{i−1}.
inline GoldenPoly eigen_scaled_expanded(std::size_t n, std::size_t i,
                                        const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenNumber phi_sq = k.phi * k.phi;
    const GoldenNumber scalar =
        detail::sign(static_cast<long>(n)) * pow(k.phi, -static_cast<long>(n) - 1);
    const GoldenPoly front = GoldenPoly::monomial(-phi_sq, 1);  // −φ²z
    const GoldenPoly left{GoldenNumber(1), -phi_sq};            // 1 − φ²z
    const GoldenPoly right{k.psi, -(phi_sq * k.phi)};           // ψ − φ³z
    return front * pow(left, static_cast<long>(n - i)) *
           pow(right, static_cast<long>(i - 1)) * scalar;
}

// Prefactor absorbed into the linear factors:
// z (φz − φ⁻¹)^{n−i} (φ²z − ψφ⁻¹)^{i−1}.
inline GoldenPoly eigen_scaled_closed(std::size_t n, std::size_t i,
                                      const Constants& k = Constants::standard()) {
    detail::check_index(n, i, "row");
    const GoldenNumber phi_inv = k.phi.inverse();
    const GoldenPoly left{-phi_inv, k.phi};                 // φz − 1/φ
    const GoldenPoly right{-(k.psi * phi_inv), k.phi * k.phi};  // φ²z − ψ/φ
    return GoldenPoly::z() * pow(left, static_cast<long>(n - i)) *
           pow(right, static_cast<long>(i - 1));
}

// Columns are the eigenvectors u_1, …, u_n in order.
inline GoldenMatrix eigenvector_matrix(std::size_t n,
                                       const Constants& k = Constants::standard()) {
    detail::check_order(n);
    GoldenMatrix u(n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 1; i <= n; ++i) {
            u(i - 1, j - 1) = eigenvector_entry(n, i, j, k);
        }
    }
    return u;
}

}  // namespace golden
