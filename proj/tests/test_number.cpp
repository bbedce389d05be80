#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "golden/number.hpp"
#include "golden/rational.hpp"

using golden::BigInt;
using golden::BigRational;
using golden::GoldenNumber;
using golden::make_rational;
using golden::parse_rational;

namespace {

GoldenNumber gn(long x, long y) {
    return GoldenNumber(BigRational(x), BigRational(y));
}

}  // namespace

TEST_CASE("rationals are canonical", "[rational]") {
    CHECK(golden::to_string(make_rational(BigInt(6), BigInt(4))) == "3/2");
    CHECK(golden::to_string(make_rational(BigInt(10), BigInt(-4))) == "-5/2");
    CHECK(golden::to_string(make_rational(BigInt(0), BigInt(-7))) == "0");
    CHECK(make_rational(BigInt(0), BigInt(5)).get_den() == 1);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);

    CHECK(parse_rational("7/21") == make_rational(BigInt(1), BigInt(3)));
    CHECK(parse_rational("-3") == BigRational(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("addition", "[number]") {
    CHECK(GoldenNumber::phi() + GoldenNumber::psi() == gn(1, 0));
    CHECK(gn(0, 0) + gn(3, 2) == gn(3, 2));
    CHECK(GoldenNumber(make_rational(1, 2), make_rational(1, 3)) +
              GoldenNumber(make_rational(1, 2), make_rational(2, 3)) ==
          gn(1, 1));
}

TEST_CASE("multiplication satisfies the defining relation", "[number]") {
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber psi = GoldenNumber::psi();
    CHECK(phi * phi == gn(1, 1));           // φ² = φ + 1
    CHECK(phi * psi == gn(-1, 0));          // φψ = -1
    CHECK(gn(2, 0) * GoldenNumber(make_rational(1, 2), BigRational(3)) == gn(1, 6));
}

TEST_CASE("inverse", "[number]") {
    const GoldenNumber phi = GoldenNumber::phi();
    CHECK(phi.inverse() == gn(-1, 1));  // 1/φ = φ - 1
    CHECK(gn(1, 0).inverse() == gn(1, 0));
    CHECK(GoldenNumber::psi().inverse() == gn(0, -1));  // 1/ψ = -φ
    CHECK_THROWS_AS(GoldenNumber().inverse(), std::domain_error);
    CHECK(phi * phi.inverse() == gn(1, 0));
}

TEST_CASE("conjugation", "[number]") {
    CHECK(GoldenNumber::phi().conjugate() == GoldenNumber::psi());
    CHECK(gn(5, 0).conjugate() == gn(5, 0));
    CHECK(gn(2, 3).conjugate().conjugate() == gn(2, 3));
}

TEST_CASE("norm", "[number]") {
    CHECK(GoldenNumber::phi().norm() == BigRational(-1));
    CHECK(gn(1, 0).norm() == BigRational(1));
    CHECK((GoldenNumber::phi() * GoldenNumber::phi()).norm() == BigRational(1));
}

TEST_CASE("powers with signed exponents", "[number]") {
    const GoldenNumber phi = GoldenNumber::phi();
    CHECK(pow(phi, -2) == gn(2, -1));
    CHECK(pow(phi, 0) == gn(1, 0));
    CHECK(pow(phi, 3) == gn(1, 2));
    CHECK(pow(GoldenNumber(), 0) == gn(1, 0));
    CHECK(pow(GoldenNumber(), 5) == gn(0, 0));
    CHECK_THROWS_AS(pow(GoldenNumber(), -1), std::domain_error);
}

TEST_CASE("formatting", "[number]") {
    CHECK(gn(1, -1).str() == "1 - 1·φ");
    CHECK(GoldenNumber().str() == "0");
    CHECK(GoldenNumber(make_rational(1, 2)).str() == "1/2");
    CHECK(GoldenNumber::phi().str() == "1·φ");
    CHECK(gn(0, -2).str() == "-2·φ");
    CHECK(GoldenNumber(make_rational(-1, 3), make_rational(2, 5)).str() ==
          "-1/3 + 2/5·φ");
}

TEST_CASE("parsing", "[number]") {
    CHECK(GoldenNumber::parse("1 - 1·φ") == GoldenNumber::psi());
    CHECK(GoldenNumber::parse("0") == GoldenNumber());
    CHECK(GoldenNumber::parse("1/2") == GoldenNumber(make_rational(1, 2)));
    CHECK(GoldenNumber::parse("1·φ") == GoldenNumber::phi());
    CHECK(GoldenNumber::parse("φ") == GoldenNumber::phi());
    CHECK(GoldenNumber::parse("-φ") == -GoldenNumber::phi());
    CHECK(GoldenNumber::parse("-1/3+2/5·φ") ==
          GoldenNumber(make_rational(-1, 3), make_rational(2, 5)));
    CHECK_THROWS_AS(GoldenNumber::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GoldenNumber::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("display approximation", "[number]") {
    CHECK(GoldenNumber::phi().approx() == Catch::Approx(1.6180339887498949));
    CHECK(GoldenNumber::psi().approx() == Catch::Approx(-0.6180339887498949));
    CHECK(GoldenNumber::sqrt5().approx() == Catch::Approx(2.2360679774997896));
}

TEST_CASE("integrality detection", "[number]") {
    CHECK(gn(3, -7).is_integral());
    CHECK_FALSE(GoldenNumber(make_rational(1, 2), BigRational(0)).is_integral());
    CHECK(pow(GoldenNumber::phi(), -9).is_integral());  // φ is a unit in Z[φ]
}
