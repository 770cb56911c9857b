#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "camix/errors.hpp"
#include "camix/word.hpp"

namespace camix {

// Local rule of an additive cellular automaton over Z_m: the map with
// y_n = sum_{i=lo..hi} coeff_i · x_{n+i} (mod m). Stored normalized, i.e.
// coefficients reduced mod m and the range trimmed so both end coefficients
// are nonzero (unless the range is a single cell).
//
// The all-zero rule cannot be built through make_rule — it is not surjective
// and degenerates every preimage computation — but it can legitimately arise
// as a power of a zero-divisor rule, so the representation admits it
// (range [0,0], single coefficient 0).
class AdditiveRule {
 public:
  Symbol modulus() const { return m_; }
  Coord range_lo() const { return lo_; }
  Coord range_hi() const { return hi_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  const std::vector<Symbol>& coeffs() const { return coeffs_; }
  bool is_zero() const { return lo_ == hi_ && coeffs_[0] == 0; }

  friend bool operator==(const AdditiveRule&, const AdditiveRule&) = default;

 private:
  AdditiveRule(Symbol m, Coord lo, Coord hi, std::vector<Symbol> coeffs)
      : m_(m), lo_(lo), hi_(hi), coeffs_(std::move(coeffs)) {}

  friend AdditiveRule make_rule(Symbol, Coord, Coord, const std::vector<Symbol>&);
  friend AdditiveRule compose_shift(const AdditiveRule&, Coord);
  friend AdditiveRule power_rule(const AdditiveRule&, std::uint64_t);

  Symbol m_;
  Coord lo_, hi_;
  std::vector<Symbol> coeffs_;
};

inline AdditiveRule make_rule(Symbol m, Coord range_lo, Coord range_hi,
                              const std::vector<Symbol>& coeffs) {
  if (m < 2) throw ContractViolation("make_rule: modulus " + std::to_string(m) + " is below 2");
  if (range_lo > range_hi)
    throw ContractViolation("make_rule: range [" + std::to_string(range_lo) + "," +
                            std::to_string(range_hi) + "] is empty");
  const std::size_t width = static_cast<std::size_t>(range_hi - range_lo + 1);
  if (coeffs.size() != width)
    throw ContractViolation("make_rule: " + std::to_string(coeffs.size()) +
                            " coefficients for a range of width " + std::to_string(width));
  std::vector<Symbol> c(width);
  for (std::size_t i = 0; i < width; ++i) c[i] = mod_reduce(coeffs[i], m);

  std::size_t first = 0, last = width;
  while (first < width && c[first] == 0) ++first;
  while (last > first && c[last - 1] == 0) --last;
  if (first == last) throw ContractViolation("make_rule: all coefficients vanish mod m");

  return AdditiveRule(m, range_lo + static_cast<Coord>(first),
                      range_lo + static_cast<Coord>(last) - 1,
                      std::vector<Symbol>(c.begin() + first, c.begin() + last));
}

// y_n = sum coeff_k · x_{n+lo+k} over every coordinate the input covers.
inline Word apply_window(const AdditiveRule& rule, const Word& input) {
  const std::size_t w = rule.width();
  if (input.size() < w)
    throw ContractViolation("apply_window: input of length " + std::to_string(input.size()) +
                            " is shorter than the rule width " + std::to_string(w));
  Word out;
  out.offset = input.offset - rule.range_lo();
  out.symbols.resize(input.size() - w + 1);
  for (std::size_t n = 0; n < out.symbols.size(); ++n) {
    Symbol acc = 0;
    for (std::size_t k = 0; k < w; ++k)
      acc = mod_reduce(acc + rule.coeffs()[k] * input.symbols[n + k], rule.modulus());
    out.symbols[n] = acc;
  }
  return out;
}

// Rule of sigma^p ∘ f: identical coefficients on the range [lo+p, hi+p].
// (sigma shifts left: (sigma x)_n = x_{n+1}.)
inline AdditiveRule compose_shift(const AdditiveRule& rule, Coord p) {
  return AdditiveRule(rule.modulus(), rule.range_lo() + p, rule.range_hi() + p, rule.coeffs());
}

// Rule of the j-th iterate, via the j-th power of the coefficient Laurent
// polynomial sum coeff_i X^i reduced mod m. j = 0 gives the identity rule.
inline AdditiveRule power_rule(const AdditiveRule& rule, std::uint64_t j) {
  const Symbol m = rule.modulus();
  std::vector<Symbol> acc{1};
  Coord acc_lo = 0;
  std::vector<Symbol> base = rule.coeffs();
  Coord base_lo = rule.range_lo();
  std::uint64_t e = j;
  while (e > 0) {
    auto mul = [m](const std::vector<Symbol>& x, const std::vector<Symbol>& y) {
      std::vector<Symbol> r(x.size() + y.size() - 1, 0);
      for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < y.size(); ++b)
          r[a + b] = mod_reduce(r[a + b] + x[a] * y[b], m);
      }
      return r;
    };
    if (e & 1) {
      acc = mul(acc, base);
      acc_lo += base_lo;
    }
    e >>= 1;
    if (e > 0) {
      base = mul(base, base);
      base_lo += base_lo;
    }
  }
  // Normalize like make_rule; the all-zero power keeps the degenerate form.
  std::size_t first = 0, last = acc.size();
  while (first < acc.size() && acc[first] == 0) ++first;
  while (last > first && acc[last - 1] == 0) --last;
  if (first == last) return AdditiveRule(m, 0, 0, {0});
  return AdditiveRule(m, acc_lo + static_cast<Coord>(first),
                      acc_lo + static_cast<Coord>(last) - 1,
                      std::vector<Symbol>(acc.begin() + first, acc.begin() + last));
}

// Surjectivity criterion for additive rules: gcd(m, all coefficients) = 1.
// Cross-validated against exhaustive preimage search in the oracle tests.
inline bool is_surjective(const AdditiveRule& rule) {
  Symbol g = rule.modulus();
  for (Symbol c : rule.coeffs()) g = std::gcd(g, c);
  return g == 1;
}

// Table-driven rule in Hedlund form: one output symbol per input word of
// length hi-lo+1, indexed lexicographically. Reference semantics for the
// brute-force oracle; never inverted symbolically.
class GeneralRule {
 public:
  GeneralRule(Symbol m, Coord range_lo, Coord range_hi, std::vector<Symbol> table)
      : m_(m), lo_(range_lo), hi_(range_hi), table_(std::move(table)) {
    if (m < 2)
      throw ContractViolation("GeneralRule: modulus " + std::to_string(m) + " is below 2");
    if (lo_ > hi_) throw ContractViolation("GeneralRule: empty range");
    BigInt want = pow_int(m_, width());
    if (BigInt(table_.size()) != want)
      throw ContractViolation("GeneralRule: table has " + std::to_string(table_.size()) +
                              " entries, expected m^width = " + want.str());
    for (Symbol s : table_)
      if (s < 0 || s >= m_)
        throw ContractViolation("GeneralRule: table symbol " + std::to_string(s) +
                                " outside [0," + std::to_string(m_) + ")");
  }

  static GeneralRule tabulate(const AdditiveRule& rule) {
    const std::size_t w = rule.width();
    std::vector<Symbol> table(static_cast<std::size_t>(pow_int(rule.modulus(), w)));
    std::vector<Symbol> in(w, 0);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      Symbol acc = 0;
      for (std::size_t k = 0; k < w; ++k)
        acc = mod_reduce(acc + rule.coeffs()[k] * in[k], rule.modulus());
      table[idx] = acc;
      for (std::size_t pos = w; pos-- > 0;) {  // next word, lexicographic
        if (++in[pos] < rule.modulus()) break;
        in[pos] = 0;
      }
    }
    return GeneralRule(rule.modulus(), rule.range_lo(), rule.range_hi(), std::move(table));
  }

  Symbol modulus() const { return m_; }
  Coord range_lo() const { return lo_; }
  Coord range_hi() const { return hi_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  const std::vector<Symbol>& table() const { return table_; }

 private:
  Symbol m_;
  Coord lo_, hi_;
  std::vector<Symbol> table_;
};

inline Word apply_window(const GeneralRule& rule, const Word& input) {
  const std::size_t w = rule.width();
  if (input.size() < w)
    throw ContractViolation("apply_window: input of length " + std::to_string(input.size()) +
                            " is shorter than the rule width " + std::to_string(w));
  Word out;
  out.offset = input.offset - rule.range_lo();
  out.symbols.resize(input.size() - w + 1);
  for (std::size_t n = 0; n < out.symbols.size(); ++n) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < w; ++k)
      idx = idx * static_cast<std::size_t>(rule.modulus()) +
            static_cast<std::size_t>(input.symbols[n + k]);
    out.symbols[n] = rule.table()[idx];
  }
  return out;
}

}  // namespace camix
