#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/rule.hpp"
#include "camix/textio.hpp"

namespace camix {

// Exponent pair of the Z²-action T_{i,j} = sigma^i f^j. Both exponents are
// nonnegative: f is not invertible in general, and the shift direction is
// absorbed into the correlation convention below.
struct ActionIndex {
  Coord i = 0;
  Coord j = 0;

  friend bool operator==(const ActionIndex&, const ActionIndex&) = default;
};

// The lattice rectangle D = [0, p-1] × [0, n-1].
struct LatticeRect {
  Coord p = 1;
  Coord n = 1;

  friend bool operator==(const LatticeRect&, const LatticeRect&) = default;
};

// One lattice point of a correlation table:
//   value     = μ(B ∩ T_{-i,-j} A), exact
//   deviation = value − μ(A)·μ(B), exact and signed
struct Correlation {
  Coord i = 0;
  Coord j = 0;
  ExactMeasure value;
  Rational deviation;
};

struct EvalOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct MixingReport {
  std::string rule_text;
  std::string a_text;
  std::string b_text;
  LatticeRect rect;
  ExactMeasure mu_a;
  ExactMeasure mu_b;
  Rational product;
  std::vector<Correlation> lattice;  // j slow, i fast
  Rational cesaro_value;
  Rational cesaro_deviation;
  Rational cesaro_bound;
  Rational weak_sum;
  Correlation strong_tail;
};

namespace detail {

inline void check_index(const ActionIndex& idx) {
  if (idx.i < 0 || idx.j < 0)
    throw ContractViolation("action index (" + std::to_string(idx.i) + "," +
                            std::to_string(idx.j) + ") has a negative exponent");
}

inline void check_same_modulus(Symbol a, Symbol b, const char* where) {
  if (a != b)
    throw ContractViolation(std::string(where) + ": moduli " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
}

}  // namespace detail

// T_{-i,-j} E = sigma^{-i} f^{-j} E. Window sits inside
// [E.lo + j·range_lo + i, E.hi + j·range_hi + i].
inline AffineEvent action_preimage(const AdditiveRule& rule, const ActionIndex& idx,
                                   const AffineEvent& e) {
  detail::check_index(idx);
  detail::check_same_modulus(rule.modulus(), e.modulus(), "action_preimage");
  return shift_event(iterated_preimage(rule, e, static_cast<std::uint64_t>(idx.j)), idx.i);
}

namespace detail {

inline Correlation correlation_at(const AdditiveRule& rule, const AffineEvent& a,
                                  const AffineEvent& b, const ActionIndex& idx,
                                  const Rational& product) {
  Correlation c;
  c.i = idx.i;
  c.j = idx.j;
  c.value = measure(intersect(b, action_preimage(rule, idx, a)));
  c.deviation = c.value.value() - product;
  return c;
}

}  // namespace detail

inline Correlation correlation(const AdditiveRule& rule, const AffineEvent& a,
                               const AffineEvent& b, const ActionIndex& idx) {
  detail::check_index(idx);
  detail::check_same_modulus(rule.modulus(), a.modulus(), "correlation");
  detail::check_same_modulus(rule.modulus(), b.modulus(), "correlation");
  return detail::correlation_at(rule, a, b, idx, measure(a).value() * measure(b).value());
}

// Least i* ≥ 0 such that for every i ≥ i*, the window of T_{-i,-j}A lies
// strictly to the right of B's window, making the correlation factorize
// exactly: i* = B.hi − A.lo − j·range_lo + 1, clamped at 0. Deviations can
// vanish earlier; past i* they vanish identically.
inline Coord disjoint_threshold(const AdditiveRule& rule, const AffineEvent& a,
                                const AffineEvent& b, Coord j) {
  if (j < 0)
    throw ContractViolation("disjoint_threshold: negative iteration exponent " +
                            std::to_string(j));
  const Coord i_star = b.window_hi() - a.window_lo() - j * rule.range_lo() + 1;
  return std::max<Coord>(0, i_star);
}

// Alternative closed form b + s + j·range_lo − a + 1 with a = A.window_lo,
// b = B.window_lo, s = B.width − 1. It agrees with disjoint_threshold only
// for range_lo = 0; for negative range_lo the sign of the j term flips.
// Reported alongside the computed value for comparison and never used as the
// threshold.
inline Coord disjoint_threshold_variant(const AdditiveRule& rule, const AffineEvent& a,
                                        const AffineEvent& b, Coord j) {
  return b.window_lo() + (static_cast<Coord>(b.width()) - 1) + j * rule.range_lo() -
         a.window_lo() + 1;
}

namespace detail {

// Evaluates one correlation per lattice slot; slots are disjoint, so threads
// share nothing but the (const) inputs. Aggregation stays sequential in slot
// order, keeping reports byte-stable for any thread count.
inline void fill_lattice(const AdditiveRule& rule, const AffineEvent& a, const AffineEvent& b,
                         const Rational& product, std::vector<Correlation>& slots,
                         const std::vector<ActionIndex>& indices, const EvalOptions& opts) {
  if (!opts.parallel || indices.size() < 2) {
    for (std::size_t k = 0; k < indices.size(); ++k)
      slots[k] = correlation_at(rule, a, b, indices[k], product);
    return;
  }
  unsigned want = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  const std::size_t nthreads = std::min<std::size_t>(want, indices.size());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t k = t; k < indices.size(); k += nthreads)
          slots[k] = correlation_at(rule, a, b, indices[k], product);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

// Full correlation table over D = [0,p-1] × [0,n-1] plus the exact Cesàro,
// weak-mixing and corner aggregates. The a-priori bound stored in
// cesaro_bound is (Σ_j min(i*(j), p)) / (p·n): indices at or past the
// disjointness threshold contribute zero deviation and every deviation has
// absolute value at most 1.
inline MixingReport cesaro_report(const AdditiveRule& rule, const AffineEvent& a,
                                  const AffineEvent& b, const LatticeRect& rect,
                                  const EvalOptions& opts = {}) {
  if (rect.p < 1 || rect.n < 1)
    throw ContractViolation("cesaro_report: rectangle (" + std::to_string(rect.p) + "," +
                            std::to_string(rect.n) + ") is empty");
  detail::check_same_modulus(rule.modulus(), a.modulus(), "cesaro_report");
  detail::check_same_modulus(rule.modulus(), b.modulus(), "cesaro_report");

  MixingReport rep;
  rep.rule_text = format_rule(rule);
  rep.a_text = format_event(a);
  rep.b_text = format_event(b);
  rep.rect = rect;
  rep.mu_a = measure(a);
  rep.mu_b = measure(b);
  rep.product = rep.mu_a.value() * rep.mu_b.value();

  std::vector<ActionIndex> indices;
  indices.reserve(static_cast<std::size_t>(rect.p * rect.n));
  for (Coord j = 0; j < rect.n; ++j)
    for (Coord i = 0; i < rect.p; ++i) indices.push_back(ActionIndex{i, j});
  rep.lattice.resize(indices.size());
  detail::fill_lattice(rule, a, b, rep.product, rep.lattice, indices, opts);

  const BigInt cells = BigInt(rect.p) * rect.n;
  Rational value_sum = 0, abs_sum = 0;
  for (const Correlation& c : rep.lattice) {
    value_sum += c.value.value();
    abs_sum += c.deviation < 0 ? -c.deviation : c.deviation;
  }
  rep.cesaro_value = value_sum / cells;
  rep.cesaro_deviation = rep.cesaro_value - rep.product;
  rep.weak_sum = abs_sum / cells;
  rep.strong_tail = rep.lattice.back();

  BigInt strip = 0;
  for (Coord j = 0; j < rect.n; ++j)
    strip += std::min<Coord>(disjoint_threshold(rule, a, b, j), rect.p);
  rep.cesaro_bound = Rational(strip, cells);
  return rep;
}

// Normalized Theorem-style weak-mixing sum (1/(p·n)) Σ |c(i,j) − μ(A)μ(B)|.
inline Rational weak_mixing_sum(const AdditiveRule& rule, const AffineEvent& a,
                                const AffineEvent& b, const LatticeRect& rect,
                                const EvalOptions& opts = {}) {
  return cesaro_report(rule, a, b, rect, opts).weak_sum;
}

// Exact deviations along an arbitrary index sequence.
inline std::vector<Rational> strong_mixing_probe(const AdditiveRule& rule, const AffineEvent& a,
                                                 const AffineEvent& b,
                                                 const std::vector<ActionIndex>& along) {
  if (along.empty()) throw ContractViolation("strong_mixing_probe: no indices");
  detail::check_same_modulus(rule.modulus(), a.modulus(), "strong_mixing_probe");
  detail::check_same_modulus(rule.modulus(), b.modulus(), "strong_mixing_probe");
  const Rational product = measure(a).value() * measure(b).value();
  std::vector<Rational> out;
  out.reserve(along.size());
  for (const ActionIndex& idx : along) {
    detail::check_index(idx);
    out.push_back(detail::correlation_at(rule, a, b, idx, product).deviation);
  }
  return out;
}

// A cylinder pair and iteration count whose correlation under f^j alone
// (no shift) fails to factorize.
struct NonfactorWitness {
  AffineEvent a;
  AffineEvent b;
  Coord j = 1;
  Rational deviation;
};

// Exhaustive scan over cylinders anchored at 0 with lengths up to
// max_cyl_len and 1 ≤ j ≤ max_j, at i = 0. Returns every nonfactorizing
// triple, largest |deviation| first; ties resolve by (A length, A symbols,
// B length, B symbols, j). An empty result means the whole box factorizes.
inline std::vector<NonfactorWitness> search_nonfactorizing(const AdditiveRule& rule,
                                                           std::size_t max_cyl_len,
                                                           std::size_t max_j) {
  if (max_cyl_len < 1 || max_j < 1)
    throw ContractViolation("search_nonfactorizing: bounds must be at least 1");
  const Symbol m = rule.modulus();

  struct Cyl {
    AffineEvent event;
    Rational mu;
  };
  std::vector<Cyl> cyls;
  for (std::size_t len = 1; len <= max_cyl_len; ++len) {
    std::vector<Symbol> syms(len, 0);
    while (true) {
      AffineEvent e = make_cylinder(m, 0, syms);
      cyls.push_back(Cyl{e, measure(e).value()});
      bool wrapped = true;
      for (std::size_t pos = len; pos-- > 0;) {
        if (++syms[pos] < m) {
          wrapped = false;
          break;
        }
        syms[pos] = 0;
      }
      if (wrapped) break;
    }
  }

  std::vector<NonfactorWitness> out;
  for (const Cyl& a : cyls) {
    for (std::size_t j = 1; j <= max_j; ++j) {
      const AffineEvent pulled = iterated_preimage(rule, a.event, j);
      for (const Cyl& b : cyls) {
        const Rational dev = measure(intersect(b.event, pulled)).value() - a.mu * b.mu;
        if (dev != 0)
          out.push_back(NonfactorWitness{a.event, b.event, static_cast<Coord>(j), dev});
      }
    }
  }

  auto abs_dev = [](const Rational& q) { return q < 0 ? Rational(-q) : q; };
  std::sort(out.begin(), out.end(),
            [&](const NonfactorWitness& x, const NonfactorWitness& y) {
              const Rational ax = abs_dev(x.deviation), ay = abs_dev(y.deviation);
              if (ax != ay) return ax > ay;
              if (x.a.rhs().size() != y.a.rhs().size())
                return x.a.rhs().size() < y.a.rhs().size();
              if (x.a.rhs() != y.a.rhs()) return x.a.rhs() < y.a.rhs();
              if (x.b.rhs().size() != y.b.rhs().size())
                return x.b.rhs().size() < y.b.rhs().size();
              if (x.b.rhs() != y.b.rhs()) return x.b.rhs() < y.b.rhs();
              return x.j < y.j;
            });
  return out;
}

}  // namespace camix
