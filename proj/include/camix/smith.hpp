#pragma once

#include <cstdlib>
#include <optional>
#include <utility>

#include "camix/matrix.hpp"

namespace camix {

// Smith normal form U·M·V = D with U, V unimodular and D diagonal whose
// entries are the nonnegative invariant factors d_1 | d_2 | ... | d_t.
struct SNFResult {
  IntMatrix u;  // rows x rows
  IntMatrix d;  // rows x cols, diagonal
  IntMatrix v;  // cols x cols
};

namespace detail {

inline BigInt trunc_div(const BigInt& a, const BigInt& b) {
  return a / b;  // cpp_int division truncates toward zero
}

}  // namespace detail

// Elementary row/column reduction over the integers. Pivot selection is the
// smallest nonzero absolute value in the working submatrix, ties broken by
// lowest (row, col), which keeps intermediate growth tame at the matrix
// sizes this library deals in. The decomposition is computed over Z, not
// mod m, so a single SNF serves every modulus and pivoting never meets a
// zero divisor.
inline SNFResult smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < nc; ++j) std::swap(a.at(x, j), a.at(y, j));
    for (std::size_t j = 0; j < nr; ++j) std::swap(u.at(x, j), u.at(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < nr; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (std::size_t i = 0; i < nc; ++i) std::swap(v.at(i, x), v.at(i, y));
  };
  auto row_sub = [&](std::size_t x, std::size_t y, const BigInt& q) {  // row x -= q*row y
    for (std::size_t j = 0; j < nc; ++j) a.at(x, j) -= q * a.at(y, j);
    for (std::size_t j = 0; j < nr; ++j) u.at(x, j) -= q * u.at(y, j);
  };
  auto col_sub = [&](std::size_t x, std::size_t y, const BigInt& q) {  // col x -= q*col y
    for (std::size_t i = 0; i < nr; ++i) a.at(i, x) -= q * a.at(i, y);
    for (std::size_t i = 0; i < nc; ++i) v.at(i, x) -= q * v.at(i, y);
  };
  auto col_add = [&](std::size_t x, std::size_t y) {  // col x += col y
    for (std::size_t i = 0; i < nr; ++i) a.at(i, x) += a.at(i, y);
    for (std::size_t i = 0; i < nc; ++i) v.at(i, x) += v.at(i, y);
  };

  auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a.at(i, j) == 0) continue;
        BigInt v_abs = abs(a.at(i, j));
        if (!best || v_abs < best_abs) {
          best = {i, j};
          best_abs = v_abs;
        }
      }
    return best;
  };

  const std::size_t steps = nr < nc ? nr : nc;
  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = find_pivot(t);
    if (!pivot) break;  // remaining submatrix is zero
    for (;;) {
      if (pivot->first != t) swap_rows(t, pivot->first);
      if (pivot->second != t) swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a.at(i, t) == 0) continue;
        row_sub(i, t, detail::trunc_div(a.at(i, t), a.at(t, t)));
        if (a.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a.at(t, j) == 0) continue;
        col_sub(j, t, detail::trunc_div(a.at(t, j), a.at(t, t)));
        if (a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Leftover remainders are strictly smaller than the pivot; re-pick.
        pivot = find_pivot(t);
        continue;
      }

      // Pivot must divide the rest of the submatrix or d_t | d_{t+1} fails.
      std::optional<std::pair<std::size_t, std::size_t>> bad;
      for (std::size_t i = t + 1; i < nr && !bad; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            bad = {i, j};
            break;
          }
      if (bad) {
        col_add(t, bad->second);
        pivot = {{t, t}};
        continue;
      }
      break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (a.at(t, t) < 0) {
      for (std::size_t j = 0; j < nc; ++j) a.at(t, j) = -a.at(t, j);
      for (std::size_t j = 0; j < nr; ++j) u.at(t, j) = -u.at(t, j);
    }
  }

  return SNFResult{std::move(u), std::move(a), std::move(v)};
}

}  // namespace camix
