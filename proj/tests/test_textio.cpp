#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/rule.hpp"
#include "camix/textio.hpp"
#include "camix/word.hpp"

using namespace camix;

TEST_CASE("rule text round-trips", "[textio]") {
  const std::string text = "m=2;range=-2..2;coeffs=1,1,1,1,1";
  const AdditiveRule r = parse_rule(text);
  CHECK(r.modulus() == 2);
  CHECK(r.range_lo() == -2);
  CHECK(r.range_hi() == 2);
  CHECK(format_rule(r) == text);

  // Whitespace anywhere is tolerated.
  const AdditiveRule w = parse_rule(" m = 2 ; range = -2 .. 2 ; coeffs = 1, 1 ,1,1 , 1 ");
  CHECK(w == r);

  // Normalization shows through the formatter.
  CHECK(format_rule(parse_rule("m=3;range=-1..1;coeffs=4,-1,3")) ==
        "m=3;range=-1..0;coeffs=1,2");
}

TEST_CASE("rule text failures are parse errors", "[textio]") {
  CHECK_THROWS_AS(parse_rule(""), ParseError);
  CHECK_THROWS_AS(parse_rule("m=2;range=0..0"), ParseError);
  CHECK_THROWS_AS(parse_rule("m=2;range=0..0;coeffs=x"), ParseError);
  CHECK_THROWS_AS(parse_rule("m=2;range=0..0;coeffs=1;junk"), ParseError);
  CHECK_THROWS_AS(parse_rule("m=1;range=0..0;coeffs=1"), ParseError);   // domain, reported as parse
  CHECK_THROWS_AS(parse_rule("m=2;range=1..0;coeffs=1"), ParseError);
  CHECK_THROWS_AS(parse_rule("m=2;range=0..1;coeffs=2,2"), ParseError);  // vanishes mod 2
}

TEST_CASE("event text round-trips", "[textio]") {
  const AffineEvent e = parse_event("@-2:[1,0,1,0,1]", 2);
  CHECK(e == make_cylinder(2, -2, {1, 0, 1, 0, 1}));
  CHECK(format_event(e) == "@-2:[1,0,1,0,1]");
  CHECK(parse_event(" @ -2 : [ 1 , 0 , 1 , 0 , 1 ] ", 2) == e);

  CHECK_THROWS_AS(parse_event("", 2), ParseError);
  CHECK_THROWS_AS(parse_event("@0:[]", 2), ParseError);
  CHECK_THROWS_AS(parse_event("@0:[2]", 2), ParseError);     // symbol out of range
  CHECK_THROWS_AS(parse_event("@0:[1]x", 2), ParseError);
  CHECK_THROWS_AS(parse_event("0:[1]", 2), ParseError);
}

TEST_CASE("non-cylinder events format as a window summary", "[textio]") {
  const AdditiveRule r = parse_rule("m=2;range=-2..2;coeffs=1,1,1,1,1");
  const AffineEvent pulled = preimage(r, make_cylinder(2, -2, {1, 0, 1, 0, 1}));
  CHECK(format_event(pulled) == "affine@[-4,4]:rows=5");
}

TEST_CASE("measure text round-trips", "[textio]") {
  const ExactMeasure mu{2, 9, 16};
  CHECK(format_measure(mu) == "16/2^9");
  const ExactMeasure back = parse_measure("16/2^9");
  CHECK(back.count == 16);
  CHECK(back.width == 9);
  CHECK(back.modulus == 2);
  CHECK(parse_measure(" 16 / 2 ^ 9 ") == mu);

  CHECK_THROWS_AS(parse_measure("16"), ParseError);
  CHECK_THROWS_AS(parse_measure("16/2"), ParseError);
  CHECK_THROWS_AS(parse_measure("a/2^9"), ParseError);
  CHECK_THROWS_AS(parse_measure("16/1^9"), ParseError);
  CHECK_THROWS_AS(parse_measure("16/2^9z"), ParseError);
}

TEST_CASE("rationals print bare integers when exact", "[textio]") {
  CHECK(format_rational(Rational(1, 4)) == "1/4");
  CHECK(format_rational(Rational(-3, 64)) == "-3/64");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(8, 4)) == "2");

  CHECK(parse_rational("3/64") == Rational(3, 64));
  CHECK(parse_rational("-1/1024") == Rational(-1, 1024));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational(" 1 / 4 ") == Rational(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("decimal companions are plain shortest doubles", "[textio]") {
  CHECK(format_decimal(Rational(1, 4)) == "0.25");
  CHECK(format_decimal(Rational(1, 2)) == "0.5");
  CHECK(format_decimal(Rational(0)) == "0");
  CHECK(format_decimal(Rational(1, 32)) == "0.03125");
}

TEST_CASE("word rendering depends on the modulus", "[textio]") {
  CHECK(to_string(Word{0, {1, 0, 1}}, 2) == "101");
  CHECK(to_string(Word{0, {10, 11, 0}}, 12) == "10,11,0");
}
