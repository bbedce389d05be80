#pragma once

#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "golden/eigen.hpp"
#include "golden/json.hpp"
#include "golden/pascal.hpp"
#include "golden/verify.hpp"

// Renderings of reports and results for the command-line front end. JSON and
// CSV carry the same exact string-encoded values; pretty output additionally
// shows display-only decimal approximations (10 significant digits, never
// compared against anything).
namespace golden {

enum class Format { pretty, json, csv };

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string approx10(const GoldenNumber& p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", p.approx());
    return buf;
}

}  // namespace detail

// --- verify ---------------------------------------------------------------

inline std::string verify_csv_header() { return "n,check,pass,counterexample\n"; }

inline std::string render_verify(const CheckReport& rep, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json:
            os << nlohmann::json(rep).dump() << "\n";
            break;
        case Format::csv:
            for (const CheckResult& c : rep.checks) {
                os << *rep.n << "," << c.name << "," << (c.pass ? "true" : "false") << ","
                   << detail::csv_escape(c.counterexample.value_or("")) << "\n";
            }
            break;
        case Format::pretty:
            if (rep.pass) {
                os << "n=" << *rep.n << ": " << rep.checks.size() << " check groups passed\n";
            } else {
                std::size_t passed = 0;
                for (const CheckResult& c : rep.checks) passed += c.pass ? 1 : 0;
                os << "n=" << *rep.n << ": FAILED (" << passed << "/" << rep.checks.size()
                   << " check groups passed)\n";
                for (const CheckResult& c : rep.checks) {
                    if (!c.pass) {
                        os << "  [FAIL] " << c.name << ": " << c.counterexample.value_or("")
                           << "\n";
                    }
                }
            }
            break;
    }
    return os.str();
}

// --- identities -------------------------------------------------------------

inline std::string identities_csv_header() { return "check,pass,counterexample\n"; }

inline std::string render_identities(const CheckReport& rep, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json:
            os << nlohmann::json(rep).dump() << "\n";
            break;
        case Format::csv:
            for (const CheckResult& c : rep.checks) {
                os << c.name << "," << (c.pass ? "true" : "false") << ","
                   << detail::csv_escape(c.counterexample.value_or("")) << "\n";
            }
            break;
        case Format::pretty: {
            std::size_t passed = 0;
            for (const CheckResult& c : rep.checks) {
                os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.pass) os << ": " << c.counterexample.value_or("");
                os << "\n";
                passed += c.pass ? 1 : 0;
            }
            if (rep.pass) {
                os << rep.checks.size() << " passes\n";
            } else {
                os << passed << "/" << rep.checks.size() << " passes\n";
            }
            break;
        }
    }
    return os.str();
}

// --- spectrum ---------------------------------------------------------------

inline std::string spectrum_csv_header(std::size_t n) {
    std::ostringstream os;
    os << "j,lambda_x,lambda_y";
    for (std::size_t i = 1; i <= n; ++i) os << ",u" << i << "_x,u" << i << "_y";
    os << "\n";
    return os.str();
}

inline std::string render_spectrum(std::size_t n, Format f) {
    std::vector<GoldenNumber> lambdas;
    for (std::size_t j = 1; j <= n; ++j) lambdas.push_back(eigenvalue(n, j));
    const GoldenMatrix u = eigenvector_matrix(n);

    std::ostringstream os;
    switch (f) {
        case Format::json: {
            nlohmann::json out{{"n", n}, {"eigenvalues", lambdas}, {"eigenvector_matrix", u}};
            os << out.dump() << "\n";
            break;
        }
        case Format::csv:
            for (std::size_t j = 1; j <= n; ++j) {
                os << j << "," << to_string(lambdas[j - 1].rational_part()) << ","
                   << to_string(lambdas[j - 1].phi_part());
                for (std::size_t i = 1; i <= n; ++i) {
                    const GoldenNumber& e = u.entry(i, j);
                    os << "," << to_string(e.rational_part()) << ","
                       << to_string(e.phi_part());
                }
                os << "\n";
            }
            break;
        case Format::pretty: {
            os << "n = " << n << "\n";
            for (std::size_t j = 1; j <= n; ++j) {
                os << "lambda_" << j << " = " << lambdas[j - 1].str()
                   << "  ≈ " << detail::approx10(lambdas[j - 1]) << "\n";
            }
            os << "eigenvector matrix U (column j is the eigenvector for lambda_j):\n";
            for (std::size_t i = 1; i <= n; ++i) {
                os << "  [ ";
                for (std::size_t j = 1; j <= n; ++j) {
                    if (j > 1) os << ", ";
                    os << u.entry(i, j).str();
                }
                os << " ]\n";
            }
            break;
        }
    }
    return os.str();
}

// --- power ------------------------------------------------------------------

inline std::string render_power(std::size_t n, unsigned long m, Format f) {
    // Spectral route, cross-checked against plain repeated multiplication
    // before anything is printed.
    const IntMatrix via_spectrum = matrix_power_spectral(n, m);
    if (via_spectrum != matrix_power_direct(n, m)) {
        throw std::logic_error("render_power: spectral and direct powers disagree");
    }

    std::ostringstream os;
    switch (f) {
        case Format::json: {
            nlohmann::json out{{"n", n}, {"m", m}, {"matrix", via_spectrum}};
            os << out.dump() << "\n";
            break;
        }
        case Format::csv:
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (c > 0) os << ",";
                    os << via_spectrum(r, c).get_str();
                }
                os << "\n";
            }
            break;
        case Format::pretty:
            os << "R^" << m << " for n = " << n << ":\n";
            for (std::size_t r = 0; r < n; ++r) {
                os << "  [ ";
                for (std::size_t c = 0; c < n; ++c) {
                    if (c > 0) os << ", ";
                    os << via_spectrum(r, c).get_str();
                }
                os << " ]\n";
            }
            break;
    }
    return os.str();
}

}  // namespace golden
