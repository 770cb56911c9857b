#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/mixing.hpp"
#include "camix/rule.hpp"
#include "camix/word.hpp"

namespace camix {

// Brute-force reference semantics: every result below is obtained by walking
// all m^w words of a finite window and applying definitions directly, with no
// linear algebra. Totality is the point, so an over-budget request is an
// error, never a truncation.

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

// The m^width words on a fixed window, visited in lexicographic order.
class WindowUniverse {
 public:
  WindowUniverse(Symbol m, Coord window_lo, Coord window_hi,
                 std::uint64_t budget = kDefaultEnumerationBudget)
      : m_(m), lo_(window_lo), hi_(window_hi) {
    if (m_ < 2)
      throw ContractViolation("WindowUniverse: modulus " + std::to_string(m_) + " is below 2");
    if (lo_ > hi_) throw ContractViolation("WindowUniverse: empty window");
    const BigInt pop = population();
    if (pop > budget)
      throw BudgetExceeded("WindowUniverse: " + pop.str() + " words on [" +
                               std::to_string(lo_) + "," + std::to_string(hi_) +
                               "] exceed the budget of " + std::to_string(budget),
                           pop, BigInt(budget));
  }

  Symbol modulus() const { return m_; }
  Coord window_lo() const { return lo_; }
  Coord window_hi() const { return hi_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  BigInt population() const { return pow_int(m_, width()); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    Word w{lo_, std::vector<Symbol>(width(), 0)};
    while (true) {
      fn(static_cast<const Word&>(w));
      bool wrapped = true;
      for (std::size_t pos = w.symbols.size(); pos-- > 0;) {
        if (++w.symbols[pos] < m_) {
          wrapped = false;
          break;
        }
        w.symbols[pos] = 0;
      }
      if (wrapped) break;
    }
  }

 private:
  Symbol m_;
  Coord lo_, hi_;
};

// All words on the one-step preimage window whose image lands in the event,
// by direct application of the local rule. Works for both rule kinds.
template <class RuleT>
std::vector<Word> brute_preimage(const RuleT& rule, const AffineEvent& a,
                                 std::uint64_t budget = kDefaultEnumerationBudget) {
  if (rule.modulus() != a.modulus())
    throw ContractViolation("brute_preimage: rule modulus " + std::to_string(rule.modulus()) +
                            " does not match event modulus " + std::to_string(a.modulus()));
  const WindowUniverse universe(a.modulus(), a.window_lo() + rule.range_lo(),
                                a.window_hi() + rule.range_hi(), budget);
  std::vector<Word> out;
  universe.for_each([&](const Word& w) {
    if (contains(a, apply_window(rule, w))) out.push_back(w);
  });
  return out;
}

// μ(B ∩ T_{-i,-j}A) by counting words on the hull of both windows: a word
// counts when it lies in B and its j-fold image, shifted by i, lies in A.
template <class RuleT>
ExactMeasure brute_correlation(const RuleT& rule, const AffineEvent& a, const AffineEvent& b,
                               const ActionIndex& idx,
                               std::uint64_t budget = kDefaultEnumerationBudget) {
  detail::check_index(idx);
  if (rule.modulus() != a.modulus() || rule.modulus() != b.modulus())
    throw ContractViolation("brute_correlation: moduli differ");
  const Coord pull_lo = a.window_lo() + idx.j * rule.range_lo() + idx.i;
  const Coord pull_hi = a.window_hi() + idx.j * rule.range_hi() + idx.i;
  const Coord hull_lo = std::min(b.window_lo(), pull_lo);
  const Coord hull_hi = std::max(b.window_hi(), pull_hi);
  const WindowUniverse universe(rule.modulus(), hull_lo, hull_hi, budget);
  const AffineEvent shifted_a = shift_event(a, idx.i);

  BigInt count = 0;
  universe.for_each([&](const Word& w) {
    if (!contains(b, w)) return;
    Word image = w;
    for (Coord step = 0; step < idx.j; ++step) image = apply_window(rule, image);
    if (contains(shifted_a, image)) ++count;
  });
  return ExactMeasure{rule.modulus(), universe.width(), count};
}

// True iff every word of the probe length has at least one preimage word.
// One pass over the preimage universe marks which outputs are reached.
template <class RuleT>
bool brute_surjectivity(const RuleT& rule, std::size_t probe_len,
                        std::uint64_t budget = kDefaultEnumerationBudget) {
  if (probe_len < 1) throw ContractViolation("brute_surjectivity: probe length is 0");
  const Symbol m = rule.modulus();
  const WindowUniverse universe(m, rule.range_lo(),
                                static_cast<Coord>(probe_len) - 1 + rule.range_hi(), budget);
  const BigInt targets = pow_int(m, probe_len);
  std::vector<bool> reached(static_cast<std::size_t>(targets), false);
  universe.for_each([&](const Word& w) {
    const Word image = apply_window(rule, w);
    std::size_t key = 0;
    for (Symbol s : image.symbols)
      key = key * static_cast<std::size_t>(m) + static_cast<std::size_t>(s);
    reached[key] = true;
  });
  return std::all_of(reached.begin(), reached.end(), [](bool f) { return f; });
}

}  // namespace camix
