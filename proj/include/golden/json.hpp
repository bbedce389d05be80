#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "golden/decompose.hpp"
#include "golden/number.hpp"
#include "golden/pascal.hpp"
#include "golden/poly.hpp"
#include "golden/verify.hpp"

// JSON encodings. Rationals and big integers travel as decimal strings so
// nothing is ever rounded; a GoldenNumber is {"x": "p/q", "y": "p/q"}.
namespace golden {

inline void to_json(nlohmann::json& out, const GoldenNumber& p) {
    out = nlohmann::json{{"x", to_string(p.rational_part())},
                         {"y", to_string(p.phi_part())}};
}

inline void from_json(const nlohmann::json& in, GoldenNumber& p) {
    p = GoldenNumber(parse_rational(in.at("x").get<std::string>()),
                     parse_rational(in.at("y").get<std::string>()));
}

inline void to_json(nlohmann::json& out, const GoldenPoly& p) {
    out = nlohmann::json::array();
    for (const GoldenNumber& c : p.coefficients()) out.push_back(c);
}

inline void from_json(const nlohmann::json& in, GoldenPoly& p) {
    std::vector<GoldenNumber> cs;
    for (const auto& c : in) cs.push_back(c.get<GoldenNumber>());
    p = GoldenPoly(std::move(cs));
}

inline void to_json(nlohmann::json& out, const CheckResult& c) {
    out = nlohmann::json{{"name", c.name}, {"pass", c.pass}};
    if (c.counterexample) out["counterexample"] = *c.counterexample;
}

inline void to_json(nlohmann::json& out, const CheckReport& rep) {
    out = nlohmann::json{{"checks", rep.checks}, {"pass", rep.pass}};
    if (rep.n) out["n"] = *rep.n;
}

inline void to_json(nlohmann::json& out, const IntMatrix& m) {
    out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m(r, c).get_str());
        out.push_back(std::move(row));
    }
}

inline void to_json(nlohmann::json& out, const GoldenMatrix& m) {
    out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.order(); ++c) row.push_back(m(r, c));
        out.push_back(std::move(row));
    }
}

inline void to_json(nlohmann::json& out, const SpectralDecomposition& d) {
    out = nlohmann::json{{"n", d.n},
                         {"eigenvalues", d.eigenvalues},
                         {"eigenvector_matrix", d.eigenvectors},
                         {"eigenvector_matrix_inverse", d.eigenvectors_inverse}};
}

}  // namespace golden
