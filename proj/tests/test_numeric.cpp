#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadid/numeric.hpp"
#include "support.hpp"

#include <cmath>
#include <limits>

using namespace quadid;
using quadid::testing::Gen;

namespace {

bool reduced(const Rational& r) {
  mpz_class g;
  const mpz_class n = r.numerator(), d = r.denominator();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && g == 1;
}

}  // namespace

TEST_CASE("parse_rational reads decimals and fractions exactly") {
  CHECK(parse_rational("0.5") == Rational(1) / Rational(2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("-3").str() == "-3");
  CHECK(parse_rational("7/14").str() == "1/2");
  CHECK(parse_rational("0.1").str() == "1/10");
  CHECK(parse_rational("+2.50").str() == "5/2");
  CHECK(parse_rational("-6/4").str() == "-3/2");
  CHECK(parse_rational("000").str() == "0");
  CHECK(parse_rational("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("parse_rational rejects malformed text and names it") {
  for (const char* bad : {"", "-", "1.", ".5", "1/", "/2", "1/-2", "1e3", "abc", "1.2.3", "1/2/3", " 1", "0x10"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("accepted malformed scalar");
    } catch (const ParseError& e) {
      CHECK(e.token() == bad);
      CHECK(std::string(e.what()).find(std::string("'") + bad + "'") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse_rational("3/0"), DivisionByZero);
}

TEST_CASE("scalar arithmetic") {
  const Rational third = parse_rational("1/3");
  CHECK(third + parse_rational("1/6") == parse_rational("1/2"));
  CHECK(parse_rational("2/3") * parse_rational("3/2") == Rational(1));
  CHECK(third > parse_rational("333/1000"));
  CHECK(abs(parse_rational("-5/7")) == parse_rational("5/7"));
  CHECK((-third).str() == "-1/3");
  CHECK(parse_rational("1/2") - parse_rational("1/2") == Rational(0));
  CHECK_THROWS_AS(third / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(divide(1.0, 0.0), DivisionByZero);
}

TEST_CASE("float backend parses to the nearest double") {
  CHECK(parse_double("0.1") == 0.1);
  CHECK(parse_double("-3") == -3.0);
  CHECK(parse_double("1/3") == 1.0 / 3.0);
  CHECK(parse_double("2/3") == 2.0 / 3.0);
  // 2^53 + 1 lies halfway between two doubles; ties go to even.
  CHECK(parse_double("9007199254740993") == 9007199254740992.0);
  CHECK(parse_double("9007199254740995") == 9007199254740996.0);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("field laws hold exactly on random rationals") {
  Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = g.rational(1'000'000, 10'000);
    const Rational b = g.rational(1'000'000, 10'000);
    const Rational c = g.rational(1'000'000, 10'000);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(reduced(a * b - c));
    REQUIRE(reduced(a + b));
    if (!b.is_zero()) {
      REQUIRE(reduced(a / b));
      REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("parse then format then parse is the identity on the exact backend") {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = g.rational(1'000'000'000, 1'000'000);
    REQUIRE(parse_rational(a.str()) == a);
    REQUIRE(parse_rational(parse_rational(a.str()).str()).str() == a.str());
  }
  // Decimal input survives through the canonical fraction form.
  CHECK(parse_rational(parse_rational("-12.375").str()) == parse_rational("-99/8"));
}

TEST_CASE("float shortest formatting round-trips") {
  Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    const double v = g.real(-1e6, 1e6);
    REQUIRE(parse_double(format_double(v)) == v);
  }
}

TEST_CASE("tolerance rule") {
  const ToleranceSpec tol;
  CHECK(tol.relative_epsilon == 1e-9);
  CHECK(tol.accepts(0.0, 0.0));
  CHECK(tol.accepts(1e-3, 1e6));
  CHECK(tol.accepts(-1e-3, 1e6));
  CHECK_FALSE(tol.accepts(2e-3, 1e6));
  CHECK_FALSE(tol.accepts(1e-300, 0.0));
}

TEST_CASE("Rational conversion to double rounds to nearest") {
  CHECK(parse_rational("1/3").to_double() == 1.0 / 3.0);
  CHECK(parse_rational("-1/10").to_double() == -0.1);
  CHECK(Rational(0).to_double() == 0.0);
}
