#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/mixing.hpp"
#include "camix/oracle.hpp"
#include "camix/rule.hpp"

using namespace camix;

TEST_CASE("window universes enumerate lexicographically within budget", "[oracle]") {
  const WindowUniverse u(2, 0, 2);
  CHECK(u.population() == 8);
  std::vector<Word> seen;
  u.for_each([&](const Word& w) { seen.push_back(w); });
  REQUIRE(seen.size() == 8);
  CHECK(seen.front().symbols == std::vector<Symbol>{0, 0, 0});
  CHECK(seen[1].symbols == std::vector<Symbol>{0, 0, 1});
  CHECK(seen.back().symbols == std::vector<Symbol>{1, 1, 1});

  try {
    WindowUniverse big(2, 0, 30, 1u << 20);
    FAIL("universe over budget must refuse");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == pow_int(2, 31));
    CHECK(e.budget == BigInt(1u << 20));
  }
}

TEST_CASE("brute preimage equals the solver on the five-cell rule", "[oracle]") {
  const AdditiveRule r = make_rule(2, -2, 2, {1, 1, 1, 1, 1});
  const AffineEvent a = make_cylinder(2, -2, {1, 0, 1, 0, 1});
  const std::vector<Word> lex = blocks(preimage(r, a));
  CHECK(brute_preimage(r, a) == lex);
  CHECK(brute_preimage(GeneralRule::tabulate(r), a) == lex);
}

TEST_CASE("brute correlation recovers plain measures and products", "[oracle]") {
  const AdditiveRule r = make_rule(2, -1, 1, {1, 1, 1});
  const AffineEvent one = make_cylinder(2, 0, {1});

  // Identity index: mu(A cap A) = mu(A).
  const ExactMeasure self = brute_correlation(r, one, one, ActionIndex{0, 0});
  CHECK(self.value() == Rational(1, 2));

  // Far shift: windows disjoint, the value factorizes.
  const ExactMeasure far = brute_correlation(r, one, one, ActionIndex{3, 1});
  CHECK(far.value() == Rational(1, 4));
  const Correlation solver = correlation(r, one, one, ActionIndex{3, 1});
  CHECK(solver.value.value() == far.value());

  CHECK_THROWS_AS(brute_correlation(r, one, one, ActionIndex{0, -1}), ContractViolation);
}

TEST_CASE("brute surjectivity matches the unit-content criterion", "[oracle]") {
  const AdditiveRule five = make_rule(2, -2, 2, {1, 1, 1, 1, 1});
  CHECK(brute_surjectivity(five, 2));
  CHECK(is_surjective(five));

  const AdditiveRule stuck = make_rule(4, 0, 1, {2, 2});
  CHECK_FALSE(brute_surjectivity(stuck, 1));
  CHECK_FALSE(is_surjective(stuck));

  const GeneralRule table = GeneralRule::tabulate(stuck);
  CHECK_FALSE(brute_surjectivity(table, 1));

  CHECK(brute_surjectivity(make_rule(6, 0, 1, {2, 3}), 2));
}

TEST_CASE("random correlations agree between solver and brute force", "[oracle]") {
  std::mt19937 gen(20260815);
  std::uniform_int_distribution<int> mdist(2, 3);
  std::uniform_int_distribution<int> widthdist(1, 3);
  std::uniform_int_distribution<int> lodist(-2, 0);
  std::uniform_int_distribution<int> lendist(1, 3);
  std::uniform_int_distribution<int> offdist(-2, 2);
  std::uniform_int_distribution<int> idist(0, 2);
  std::uniform_int_distribution<int> jdist(0, 2);

  int done = 0;
  while (done < 50) {
    const Symbol m = mdist(gen);
    const int w = widthdist(gen);
    const Coord lo = lodist(gen);
    std::vector<Symbol> coeffs(static_cast<std::size_t>(w));
    std::uniform_int_distribution<int> sym(0, static_cast<int>(m) - 1);
    for (auto& c : coeffs) c = sym(gen);

    AdditiveRule rule = [&]() -> AdditiveRule {
      try {
        return make_rule(m, lo, lo + w - 1, coeffs);
      } catch (const ContractViolation&) {
        return make_rule(m, 0, 0, {1});
      }
    }();

    const auto random_cyl = [&]() {
      const int len = lendist(gen);
      std::vector<Symbol> syms(static_cast<std::size_t>(len));
      for (auto& s : syms) s = sym(gen);
      return make_cylinder(m, offdist(gen), syms);
    };
    const AffineEvent a = random_cyl();
    const AffineEvent b = random_cyl();
    const ActionIndex idx{idist(gen), jdist(gen)};

    const Coord pull_lo = a.window_lo() + idx.j * rule.range_lo() + idx.i;
    const Coord pull_hi = a.window_hi() + idx.j * rule.range_hi() + idx.i;
    const Coord hull_lo = std::min(b.window_lo(), pull_lo);
    const Coord hull_hi = std::max(b.window_hi(), pull_hi);
    if (hull_hi - hull_lo + 1 > 12) continue;

    const Correlation solver = correlation(rule, a, b, idx);
    const ExactMeasure brute = brute_correlation(rule, a, b, idx);
    REQUIRE(solver.value.count == brute.count);
    REQUIRE(solver.value.width == brute.width);
    ++done;
  }
}
