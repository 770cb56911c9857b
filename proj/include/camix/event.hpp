#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "camix/errors.hpp"
#include "camix/matrix.hpp"
#include "camix/modsolve.hpp"
#include "camix/rule.hpp"
#include "camix/word.hpp"

namespace camix {

// Finite union-free event over Z_m: the set of configurations x whose
// restriction to the window [window_lo, window_hi] satisfies A·x ≡ b (mod m).
// Cylinders are the special case A = I. Matrix and right-hand side are kept
// reduced mod m; zero rows of constraints mean the full window.
class AffineEvent {
 public:
  AffineEvent(Symbol m, Coord window_lo, Coord window_hi, IntMatrix a, std::vector<Symbol> b)
      : m_(m), lo_(window_lo), hi_(window_hi), a_(std::move(a)), b_(std::move(b)) {
    if (m_ < 2)
      throw ContractViolation("AffineEvent: modulus " + std::to_string(m_) + " is below 2");
    if (lo_ > hi_) throw ContractViolation("AffineEvent: empty window");
    if (a_.cols() != width())
      throw ContractViolation("AffineEvent: matrix has " + std::to_string(a_.cols()) +
                              " columns for a window of width " + std::to_string(width()));
    if (b_.size() != a_.rows())
      throw ContractViolation("AffineEvent: " + std::to_string(b_.size()) +
                              " right-hand sides for " + std::to_string(a_.rows()) + " rows");
    a_ = a_.reduced_mod(m_);
    for (Symbol& s : b_) s = mod_reduce(s, m_);
  }

  Symbol modulus() const { return m_; }
  Coord window_lo() const { return lo_; }
  Coord window_hi() const { return hi_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  std::size_t rows() const { return a_.rows(); }
  const IntMatrix& matrix() const { return a_; }
  const std::vector<Symbol>& rhs() const { return b_; }

  friend bool operator==(const AffineEvent&, const AffineEvent&) = default;

 private:
  Symbol m_;
  Coord lo_, hi_;
  IntMatrix a_;
  std::vector<Symbol> b_;
};

// Cylinder [x_a = s_0, ..., x_{a+k-1} = s_{k-1}].
inline AffineEvent make_cylinder(Symbol m, Coord offset, const std::vector<Symbol>& symbols) {
  if (symbols.empty()) throw ContractViolation("make_cylinder: no symbols");
  for (Symbol s : symbols)
    if (s < 0 || s >= m)
      throw ContractViolation("make_cylinder: symbol " + std::to_string(s) + " outside [0," +
                              std::to_string(m) + ")");
  const std::size_t k = symbols.size();
  return AffineEvent(m, offset, offset + static_cast<Coord>(k) - 1, IntMatrix::identity(k),
                     symbols);
}

// Measure of an event under the uniform Bernoulli measure, kept as the exact
// pair (solution count, window width): value = count / m^width. Width is never
// reduced away, so a preimage that grows the window prints with its true
// denominator even when the rational value collapses.
struct ExactMeasure {
  Symbol modulus = 2;
  std::uint64_t width = 0;
  BigInt count = 0;

  Rational value() const {
    return Rational(count) / Rational(pow_int(modulus, width));
  }

  friend bool operator==(const ExactMeasure& x, const ExactMeasure& y) {
    return x.value() == y.value();
  }
};

inline ExactMeasure measure(const AffineEvent& event) {
  return ExactMeasure{event.modulus(), event.width(),
                      count_solutions(event.matrix(), event.rhs(), event.modulus())};
}

// Same event expressed on an enclosing window; the added coordinates are
// unconstrained, so the measure is unchanged.
inline AffineEvent embed(const AffineEvent& event, Coord window_lo, Coord window_hi) {
  if (window_lo > event.window_lo() || window_hi < event.window_hi())
    throw ContractViolation("embed: target window [" + std::to_string(window_lo) + "," +
                            std::to_string(window_hi) + "] does not contain [" +
                            std::to_string(event.window_lo()) + "," +
                            std::to_string(event.window_hi()) + "]");
  const std::size_t new_width = static_cast<std::size_t>(window_hi - window_lo + 1);
  const std::size_t shift = static_cast<std::size_t>(event.window_lo() - window_lo);
  IntMatrix a(event.rows(), new_width);
  for (std::size_t r = 0; r < event.rows(); ++r)
    for (std::size_t c = 0; c < event.width(); ++c)
      a.at(r, shift + c) = event.matrix().at(r, c);
  return AffineEvent(event.modulus(), window_lo, window_hi, std::move(a), event.rhs());
}

// Preimage under sigma^i: constraints on (sigma^i x)_n are constraints on
// x_{n+i}, so the window slides by +i and nothing else moves.
inline AffineEvent shift_event(const AffineEvent& event, Coord i) {
  return AffineEvent(event.modulus(), event.window_lo() + i, event.window_hi() + i,
                     event.matrix(), event.rhs());
}

// Intersection, expressed on the union window with the constraint rows of
// both operands stacked.
inline AffineEvent intersect(const AffineEvent& x, const AffineEvent& y) {
  if (x.modulus() != y.modulus())
    throw ContractViolation("intersect: moduli " + std::to_string(x.modulus()) + " and " +
                            std::to_string(y.modulus()) + " differ");
  const Coord lo = std::min(x.window_lo(), y.window_lo());
  const Coord hi = std::max(x.window_hi(), y.window_hi());
  const AffineEvent ex = embed(x, lo, hi);
  const AffineEvent ey = embed(y, lo, hi);
  const std::size_t w = ex.width();
  IntMatrix a(ex.rows() + ey.rows(), w);
  for (std::size_t r = 0; r < ex.rows(); ++r)
    for (std::size_t c = 0; c < w; ++c) a.at(r, c) = ex.matrix().at(r, c);
  for (std::size_t r = 0; r < ey.rows(); ++r)
    for (std::size_t c = 0; c < w; ++c) a.at(ex.rows() + r, c) = ey.matrix().at(r, c);
  std::vector<Symbol> b = ex.rhs();
  b.insert(b.end(), ey.rhs().begin(), ey.rhs().end());
  return AffineEvent(x.modulus(), lo, hi, std::move(a), std::move(b));
}

// Preimage under one application of the rule. A constraint A·y ≡ b on the
// window [u,v] pulls back through y_n = sum coeff_k · x_{n+lo+k} to the
// constraint (A·S)·x ≡ b on [u+lo, v+hi], where S is the banded matrix with
// S[n][n+k] = coeff_k.
inline AffineEvent preimage(const AdditiveRule& rule, const AffineEvent& event) {
  if (rule.modulus() != event.modulus())
    throw ContractViolation("preimage: rule modulus " + std::to_string(rule.modulus()) +
                            " does not match event modulus " + std::to_string(event.modulus()));
  const std::size_t out_w = event.width();
  const std::size_t in_w = out_w + rule.width() - 1;
  IntMatrix s(out_w, in_w);
  for (std::size_t n = 0; n < out_w; ++n)
    for (std::size_t k = 0; k < rule.width(); ++k) s.at(n, n + k) = rule.coeffs()[k];
  return AffineEvent(event.modulus(), event.window_lo() + rule.range_lo(),
                     event.window_hi() + rule.range_hi(), event.matrix() * s, event.rhs());
}

// Preimage under the j-th iterate. The iterate's own range can shrink when
// leading coefficients vanish mod m, so the result is re-embedded on the full
// window [lo + j·range_lo, hi + j·range_hi]; the measure is unaffected.
inline AffineEvent iterated_preimage(const AdditiveRule& rule, const AffineEvent& event,
                                     std::uint64_t j) {
  if (rule.modulus() != event.modulus())
    throw ContractViolation("iterated_preimage: rule modulus " +
                            std::to_string(rule.modulus()) + " does not match event modulus " +
                            std::to_string(event.modulus()));
  const AffineEvent pulled = preimage(power_rule(rule, j), event);
  const Coord sj = static_cast<Coord>(j);
  return embed(pulled, event.window_lo() + sj * rule.range_lo(),
               event.window_hi() + sj * rule.range_hi());
}

// Whether a word's restriction to the event's window satisfies every
// constraint row. The word must cover the window.
inline bool contains(const AffineEvent& event, const Word& w) {
  if (w.lo() > event.window_lo() || w.hi() < event.window_hi())
    throw ContractViolation("contains: word on [" + std::to_string(w.lo()) + "," +
                            std::to_string(w.hi()) + "] does not cover the event window [" +
                            std::to_string(event.window_lo()) + "," +
                            std::to_string(event.window_hi()) + "]");
  for (std::size_t r = 0; r < event.rows(); ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < event.width(); ++c)
      acc += event.matrix().at(r, c) * w.at(event.window_lo() + static_cast<Coord>(c));
    if (mod_reduce(acc, event.modulus()) != event.rhs()[r]) return false;
  }
  return true;
}

// Every word on the event's window satisfying its constraints, in
// lexicographic order. Refuses (with the exact count) when the solution set
// exceeds the cap.
inline std::vector<Word> blocks(const AffineEvent& event,
                                std::uint64_t cap = (std::uint64_t{1} << 20)) {
  std::vector<std::vector<Symbol>> sols =
      enumerate_solutions(event.matrix(), event.rhs(), event.modulus(), cap);
  std::vector<Word> out;
  out.reserve(sols.size());
  for (auto& s : sols) out.push_back(Word{event.window_lo(), std::move(s)});
  return out;
}

}  // namespace camix
