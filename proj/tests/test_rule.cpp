#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "camix/errors.hpp"
#include "camix/rule.hpp"
#include "camix/word.hpp"

using namespace camix;

TEST_CASE("rule construction normalizes coefficients", "[rule]") {
  const AdditiveRule r = make_rule(3, -1, 1, {4, -1, 3});
  CHECK(r.modulus() == 3);
  CHECK(r.range_lo() == -1);
  CHECK(r.range_hi() == 0);  // trailing coefficient 3 vanishes mod 3
  CHECK(r.coeffs() == std::vector<Symbol>{1, 2});

  const AdditiveRule t = make_rule(2, -2, 2, {0, 1, 1, 0, 0});
  CHECK(t.range_lo() == -1);
  CHECK(t.range_hi() == 0);
  CHECK(t.coeffs() == std::vector<Symbol>{1, 1});
}

TEST_CASE("rule construction rejects bad input", "[rule]") {
  CHECK_THROWS_AS(make_rule(1, 0, 0, {1}), ContractViolation);
  CHECK_THROWS_AS(make_rule(2, 1, 0, {1}), ContractViolation);
  CHECK_THROWS_AS(make_rule(2, 0, 1, {1}), ContractViolation);      // wrong count
  CHECK_THROWS_AS(make_rule(2, 0, 1, {0, 2}), ContractViolation);   // vanishes mod 2
  CHECK_NOTHROW(make_rule(4, 0, 1, {2, 2}));                        // nonzero mod 4
}

TEST_CASE("local application of the five-cell rule", "[rule]") {
  const AdditiveRule r = make_rule(2, -2, 2, {1, 1, 1, 1, 1});
  const Word in{-3, {1, 1, 1, 1, 1, 0, 0, 0, 0}};
  const Word out = apply_window(r, in);
  CHECK(out.offset == -1);
  CHECK(out.symbols == std::vector<Symbol>{1, 0, 1, 0, 1});
  CHECK_THROWS_AS(apply_window(r, Word{0, {1, 1}}), ContractViolation);
}

TEST_CASE("shift composition moves the range", "[rule]") {
  const AdditiveRule r = make_rule(2, -1, 1, {1, 1, 1});
  const AdditiveRule s = compose_shift(r, 2);
  CHECK(s.range_lo() == 1);
  CHECK(s.range_hi() == 3);
  CHECK(s.coeffs() == r.coeffs());

  const Word in{0, {1, 0, 0, 1}};
  const Word a = apply_window(r, in);
  const Word b = apply_window(s, in);
  CHECK(a.symbols == b.symbols);
  CHECK(b.offset == a.offset - 2);
}

TEST_CASE("iterate coefficients follow polynomial powers", "[rule]") {
  const AdditiveRule r = make_rule(2, -1, 1, {1, 1, 1});

  const AdditiveRule r0 = power_rule(r, 0);
  CHECK(r0.range_lo() == 0);
  CHECK(r0.range_hi() == 0);
  CHECK(r0.coeffs() == std::vector<Symbol>{1});

  CHECK(power_rule(r, 1) == r);

  const AdditiveRule r2 = power_rule(r, 2);
  CHECK(r2.range_lo() == -2);
  CHECK(r2.range_hi() == 2);
  CHECK(r2.coeffs() == std::vector<Symbol>{1, 0, 1, 0, 1});

  // (2 + 2X)^2 = 4 + 8X + 4X^2 vanishes identically mod 4.
  const AdditiveRule n = make_rule(4, 0, 1, {2, 2});
  const AdditiveRule n2 = power_rule(n, 2);
  CHECK(n2.is_zero());
  CHECK(n2.range_lo() == 0);
  CHECK(n2.range_hi() == 0);

  // Iterating the zero rule stays zero.
  CHECK(power_rule(n2, 3).is_zero());
}

TEST_CASE("iterated application agrees with the iterate rule", "[rule]") {
  const AdditiveRule r = make_rule(3, -1, 1, {1, 2, 1});
  const AdditiveRule r3 = power_rule(r, 3);
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> sym(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Word w{-4, std::vector<Symbol>(9)};
    for (auto& s : w.symbols) s = sym(gen);
    Word step = w;
    for (int k = 0; k < 3; ++k) step = apply_window(r, step);
    const Word direct = apply_window(r3, w);
    REQUIRE(step.offset == direct.offset);
    REQUIRE(step.symbols == direct.symbols);
  }
}

TEST_CASE("surjectivity is the unit-content criterion", "[rule]") {
  CHECK(is_surjective(make_rule(2, -2, 2, {1, 1, 1, 1, 1})));
  CHECK(is_surjective(make_rule(2, 0, 0, {1})));
  CHECK(is_surjective(make_rule(6, 0, 1, {2, 3})));
  CHECK_FALSE(is_surjective(make_rule(4, 0, 1, {2, 2})));
  CHECK_FALSE(is_surjective(make_rule(6, 0, 1, {2, 4})));
  CHECK_FALSE(is_surjective(power_rule(make_rule(4, 0, 1, {2, 2}), 2)));  // zero rule
}

TEST_CASE("tabulated rules reproduce the additive rule", "[rule]") {
  const AdditiveRule r = make_rule(4, -1, 1, {1, 2, 3});
  const GeneralRule g = GeneralRule::tabulate(r);
  CHECK(g.modulus() == 4);
  CHECK(g.range_lo() == -1);
  CHECK(g.range_hi() == 1);

  std::mt19937 gen(7);
  std::uniform_int_distribution<int> sym(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Word w{-2, std::vector<Symbol>(6)};
    for (auto& s : w.symbols) s = sym(gen);
    const Word a = apply_window(r, w);
    const Word b = apply_window(g, w);
    REQUIRE(a.offset == b.offset);
    REQUIRE(a.symbols == b.symbols);
  }
}

TEST_CASE("general rule validates its table", "[rule]") {
  CHECK_THROWS_AS(GeneralRule(2, 0, 1, {0, 1, 1}), ContractViolation);      // wrong size
  CHECK_THROWS_AS(GeneralRule(2, 0, 1, {0, 1, 1, 2}), ContractViolation);   // symbol out of range
  CHECK_NOTHROW(GeneralRule(2, 0, 1, {0, 1, 1, 0}));
}
