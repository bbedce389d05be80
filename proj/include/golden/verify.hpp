#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "golden/eigen.hpp"
#include "golden/matrix.hpp"
#include "golden/number.hpp"
#include "golden/pascal.hpp"
#include "golden/poly.hpp"

namespace golden {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::optional<std::string> counterexample;
};

// Aggregate pass/fail report; `n` is absent for checks that are not tied to
// a matrix order (the ring identity suite).
struct CheckReport {
    std::optional<std::size_t> n;
    std::vector<CheckResult> checks;
    bool pass = false;

    void add(std::string name, bool ok, std::string counterexample = {}) {
        CheckResult r;
        r.name = std::move(name);
        r.pass = ok;
        if (!ok) r.counterexample = std::move(counterexample);
        checks.push_back(std::move(r));
    }

    void finalize() {
        pass = true;
        for (const auto& c : checks) pass = pass && c.pass;
    }
};

// Outcome of checking R·u_j = λ_j·u_j entrywise. On failure the first
// differing 1-based index and both offending values are recorded.
struct EigenpairReport {
    std::size_t n = 0;
    std::size_t j = 0;
    bool pass = false;
    std::optional<std::size_t> mismatch_index;
    GoldenNumber matrix_side;  // (R·u_j)_i at the mismatch
    GoldenNumber scaled_side;  // (λ_j·u_j)_i at the mismatch
};

inline EigenpairReport verify_eigenpair(std::size_t n, std::size_t j,
                                        const Constants& k = Constants::standard()) {
    detail::check_index(n, j, "eigenvector");
    EigenpairReport rep;
    rep.n = n;
    rep.j = j;
    const BinomialMatrix r(n);
    const GoldenVector u = eigenvector(n, j, k);
    const GoldenNumber lambda = eigenvalue(n, j, k);
    rep.pass = true;
    for (std::size_t i = 1; i <= n; ++i) {
        GoldenNumber lhs;
        for (std::size_t col = 1; col <= n; ++col) {
            const BigInt& c = r.entry(i, col);
            if (c == 0) continue;
            lhs += GoldenNumber(c) * u.entry(col);
        }
        const GoldenNumber rhs = lambda * u.entry(i);
        if (lhs != rhs) {
            rep.pass = false;
            rep.mismatch_index = i;
            rep.matrix_side = lhs;
            rep.scaled_side = rhs;
            break;
        }
    }
    return rep;
}

namespace detail {

inline std::string describe_pair(const GoldenNumber& a, const GoldenNumber& b) {
    return a.str() + " vs " + b.str();
}

}  // namespace detail

/**
 * Full verification of the eigenstructure at order n, in four check groups:
 *
 *   coefficient_identity — [z^j] U_i(z) = u_ij for all i, j, plus the shape
 *                          facts deg U_i = n and [z^0] U_i = 0;
 *   derivation_chain     — the six row polynomials (row sum, regrouped sum,
 *                          row closed form, scaled substitution, expanded
 *                          substitution, scaled closed form) coincide for
 *                          every i;
 *   eigenpairs           — R·u_j = λ_j·u_j exactly for every j;
 *   spectrum             — the λ_j are pairwise distinct and every λ_j and
 *                          u_ij has integer coordinates.
 *
 * Every comparison is exact equality of canonical forms.
 */
inline CheckReport verify_order(std::size_t n, const Constants& k = Constants::standard()) {
    detail::check_order(n);
    CheckReport rep;
    rep.n = n;

    {
        bool ok = true;
        std::string cx;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            const GoldenPoly u_poly = generating_polynomial(n, i, k);
            if (u_poly.degree() != std::optional<std::size_t>(n)) {
                ok = false;
                cx = "i=" + std::to_string(i) + ": generating polynomial degree is not " +
                     std::to_string(n);
                break;
            }
            if (!u_poly.coeff(0).is_zero()) {
                ok = false;
                cx = "i=" + std::to_string(i) + ": nonzero constant coefficient " +
                     u_poly.coeff(0).str();
                break;
            }
            for (std::size_t j = 1; j <= n; ++j) {
                const GoldenNumber from_poly = u_poly.coeff(j);
                const GoldenNumber from_sum = eigenvector_entry(n, i, j, k);
                if (from_poly != from_sum) {
                    ok = false;
                    cx = "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ": " +
                         detail::describe_pair(from_poly, from_sum);
                    break;
                }
            }
        }
        rep.add("coefficient_identity", ok, cx);
    }

    {
        bool ok = true;
        std::string cx;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            const GoldenPoly base = row_action_poly(n, i, k);
            const std::pair<const char*, GoldenPoly> forms[] = {
                {"regrouped row sum", row_action_regrouped(n, i, k)},
                {"row closed form", row_action_closed(n, i, k)},
                {"scaled substitution", eigen_scaled_poly(n, i, k)},
                {"expanded substitution", eigen_scaled_expanded(n, i, k)},
                {"scaled closed form", eigen_scaled_closed(n, i, k)},
            };
            for (const auto& [label, poly] : forms) {
                if (poly != base) {
                    ok = false;
                    cx = "i=" + std::to_string(i) + ": " + label +
                         " differs from the row sum: " + poly.str() + " vs " + base.str();
                    break;
                }
            }
        }
        rep.add("derivation_chain", ok, cx);
    }

    {
        bool ok = true;
        std::string cx;
        for (std::size_t j = 1; j <= n; ++j) {
            const EigenpairReport e = verify_eigenpair(n, j, k);
            if (!e.pass) {
                ok = false;
                cx = "j=" + std::to_string(j) + ", first mismatch at i=" +
                     std::to_string(*e.mismatch_index) + ": " +
                     detail::describe_pair(e.matrix_side, e.scaled_side);
                break;
            }
        }
        rep.add("eigenpairs", ok, cx);
    }

    {
        bool ok = true;
        std::string cx;
        std::vector<GoldenNumber> lambdas;
        lambdas.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) lambdas.push_back(eigenvalue(n, j, k));
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!lambdas[a].is_integral()) {
                ok = false;
                cx = "eigenvalue j=" + std::to_string(a + 1) +
                     " is not in Z[φ]: " + lambdas[a].str();
                break;
            }
            for (std::size_t b = a + 1; b < n; ++b) {
                if (lambdas[a] == lambdas[b]) {
                    ok = false;
                    cx = "eigenvalues j=" + std::to_string(a + 1) + " and j=" +
                         std::to_string(b + 1) + " coincide: " + lambdas[a].str();
                    break;
                }
            }
        }
        for (std::size_t j = 1; j <= n && ok; ++j) {
            for (std::size_t i = 1; i <= n; ++i) {
                const GoldenNumber u = eigenvector_entry(n, i, j, k);
                if (!u.is_integral()) {
                    ok = false;
                    cx = "u(" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not in Z[φ]: " + u.str();
                    break;
                }
            }
        }
        rep.add("spectrum", ok, cx);
    }

    rep.finalize();
    return rep;
}

// The closing identities of the golden ring plus the conjugation/norm laws.
// With the standard constants every check passes; the Constants parameter
// exists so tests can drive the suite with a corrupted value.
inline CheckReport verify_ring_identities(const Constants& k = Constants::standard()) {
    CheckReport rep;
    const GoldenNumber one(1);
    const GoldenNumber& a = k.phi;
    const GoldenNumber& b = k.psi;

    const GoldenNumber ab = a * b;
    rep.add("phi_times_psi", ab == GoldenNumber(-1),
            "φ·ψ = " + ab.str() + ", expected -1");
    const GoldenNumber sum = a + b;
    rep.add("phi_plus_psi", sum == one, "φ+ψ = " + sum.str() + ", expected 1");
    const GoldenNumber sq = a * a;
    rep.add("phi_squared", sq == a + one,
            "φ² = " + sq.str() + ", expected " + (a + one).str());
    const bool inv_ok = !a.is_zero() && b == -a.inverse();
    rep.add("psi_is_minus_inverse_phi", inv_ok,
            a.is_zero() ? "φ = 0 has no inverse"
                        : "-1/φ = " + (-a.inverse()).str() + ", expected " + b.str());
    const bool ratio_ok = !a.is_zero() && -(b * a.inverse()) == one + b;
    rep.add("closing_ratio", ratio_ok,
            a.is_zero() ? "φ = 0 has no inverse"
                        : "-ψ/φ = " + (-(b * a.inverse())).str() + ", expected " +
                              (one + b).str());

    {
        bool ok = a.conjugate() == GoldenNumber::psi() &&
                  GoldenNumber::psi().conjugate() == GoldenNumber::phi();
        const GoldenNumber samples[] = {a, b, a * a + GoldenNumber(3), a - b,
                                        GoldenNumber(make_rational(2, 3), make_rational(-5, 7))};
        for (const GoldenNumber& p : samples) {
            ok = ok && p.conjugate().conjugate() == p;
            for (const GoldenNumber& q : samples) {
                ok = ok && (p * q).conjugate() == p.conjugate() * q.conjugate();
                ok = ok && (p + q).conjugate() == p.conjugate() + q.conjugate();
                ok = ok && canonical((p * q).norm()) == canonical(p.norm() * q.norm());
            }
        }
        ok = ok && GoldenNumber::phi().norm() == -1;
        rep.add("conjugation_and_norm", ok, "conjugation/norm law violated");
    }

    rep.finalize();
    return rep;
}

// trace(R) = Σ_j λ_j and det(R) = Π_j λ_j, both sides computed independently:
// trace and determinant from the integer matrix, the sums/products from the
// eigenvalue formula.
inline CheckReport verify_trace_det(std::size_t n) {
    detail::check_order(n);
    CheckReport rep;
    rep.n = n;
    const BinomialMatrix r(n);

    GoldenNumber lambda_sum, lambda_product(1);
    for (std::size_t j = 1; j <= n; ++j) {
        const GoldenNumber lambda = eigenvalue(n, j);
        lambda_sum += lambda;
        lambda_product *= lambda;
    }

    const GoldenNumber trace_lifted{BigInt(r.trace())};
    rep.add("trace_equals_eigenvalue_sum", lambda_sum == trace_lifted,
            "trace(R) = " + trace_lifted.str() + " but Σλ = " + lambda_sum.str());

    const GoldenNumber det_lifted = det(lift(r));
    rep.add("determinant_equals_eigenvalue_product", det_lifted == lambda_product,
            "det(R) = " + det_lifted.str() + " but Πλ = " + lambda_product.str());

    const bool unit = lambda_product == GoldenNumber(1) || lambda_product == GoldenNumber(-1);
    rep.add("determinant_is_plus_minus_one", unit, "Πλ = " + lambda_product.str());

    rep.finalize();
    return rep;
}

}  // namespace golden
