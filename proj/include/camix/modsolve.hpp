#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "camix/smith.hpp"

namespace camix {

// Description of {x in Z_m^cols : A·x ≡ b (mod m)}.
//
// `coordinate_multiplicity` lists, per coordinate of the transformed basis
// z = V^{-1}·x, how many residues that coordinate may take; the product of
// all multiplicities equals `count`.
struct SolutionSet {
  Symbol modulus = 2;
  bool consistent = false;
  BigInt count;
  std::vector<Symbol> particular;                // empty unless consistent
  std::vector<BigInt> coordinate_multiplicity;   // empty unless consistent
};

namespace detail {

struct SolveState {
  SNFResult snf;
  Symbol modulus = 2;
  bool consistent = false;
  BigInt count;
  std::vector<Symbol> z_particular;   // one value per column, transformed basis
  std::vector<Symbol> z_step;         // spacing of admissible residues
  std::vector<BigInt> z_multiplicity;
};

inline void check_solve_args(const IntMatrix& a, const std::vector<Symbol>& b, Symbol m) {
  if (m < 2)
    throw ContractViolation("solve_mod: modulus " + std::to_string(m) + " is below 2");
  if (b.size() != a.rows())
    throw ContractViolation("solve_mod: rhs length " + std::to_string(b.size()) +
                            " does not match " + std::to_string(a.rows()) + " equations");
}

inline SolveState solve_state(const IntMatrix& a, const std::vector<Symbol>& b, Symbol m) {
  check_solve_args(a, b, m);
  SolveState st;
  st.modulus = m;
  st.snf = smith_normal_form(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = rows < cols ? rows : cols;

  // Transformed rhs: U·b mod m. Each congruence becomes d_i·z_i ≡ beta_i.
  std::vector<Symbol> beta(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < rows; ++k) acc += st.snf.u.at(i, k) * b[k];
    beta[i] = mod_reduce(acc, m);
  }

  st.consistent = true;
  st.count = 1;
  st.z_particular.assign(cols, 0);
  st.z_step.assign(cols, 1);
  st.z_multiplicity.assign(cols, 1);

  for (std::size_t i = 0; i < rows; ++i) {
    if (i < diag) {
      const Symbol d = mod_reduce(st.snf.d.at(i, i), m);
      const Symbol g = d == 0 ? m : std::gcd(d, m);
      if (beta[i] % g != 0) {
        st.consistent = false;
        break;
      }
      // d·z ≡ beta has g solutions spaced m/g apart.
      if (d == 0) {
        st.z_particular[i] = 0;
      } else {
        const Symbol md = m / g;
        st.z_particular[i] = mod_reduce((beta[i] / g) % md * mod_inverse(d / g, md), md);
      }
      st.z_step[i] = m / g;
      st.z_multiplicity[i] = g;
      st.count *= g;
    } else if (beta[i] != 0) {  // surplus equation 0 ≡ beta_i
      st.consistent = false;
      break;
    }
  }
  if (st.consistent) {
    for (std::size_t i = diag; i < cols; ++i) {
      st.z_multiplicity[i] = m;
      st.count *= m;
    }
  } else {
    st.count = 0;
  }
  return st;
}

inline std::vector<Symbol> map_to_x(const SolveState& st, const std::vector<Symbol>& z) {
  const std::size_t cols = st.snf.v.rows();
  std::vector<Symbol> x(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < cols; ++k) acc += st.snf.v.at(i, k) * z[k];
    x[i] = mod_reduce(acc, st.modulus);
  }
  return x;
}

}  // namespace detail

inline SolutionSet solve_mod(const IntMatrix& a, const std::vector<Symbol>& b, Symbol m) {
  detail::SolveState st = detail::solve_state(a, b, m);
  SolutionSet out;
  out.modulus = m;
  out.consistent = st.consistent;
  out.count = st.count;
  if (st.consistent) {
    out.particular = detail::map_to_x(st, st.z_particular);
    out.coordinate_multiplicity = st.z_multiplicity;
  }
  return out;
}

inline BigInt count_solutions(const IntMatrix& a, const std::vector<Symbol>& b, Symbol m) {
  return detail::solve_state(a, b, m).count;
}

// Every solution, each exactly once, in lexicographic order of the residue
// vector. `cap` guards against combinatorial explosion; exceeding it raises
// EnumerationRefused carrying the exact count.
inline std::vector<std::vector<Symbol>> enumerate_solutions(const IntMatrix& a,
                                                            const std::vector<Symbol>& b,
                                                            Symbol m, std::uint64_t cap) {
  detail::SolveState st = detail::solve_state(a, b, m);
  if (!st.consistent) return {};
  if (st.count > cap)
    throw EnumerationRefused("enumerate_solutions: " + st.count.str() +
                                 " solutions exceed cap " + std::to_string(cap),
                             st.count);

  const std::size_t cols = a.cols();
  std::vector<std::vector<Symbol>> out;
  out.reserve(static_cast<std::size_t>(st.count));
  std::vector<Symbol> index(cols, 0);  // per-coordinate choice in [0, multiplicity)
  for (;;) {
    std::vector<Symbol> z(cols);
    for (std::size_t i = 0; i < cols; ++i)
      z[i] = mod_reduce(st.z_particular[i] + index[i] * st.z_step[i], m);
    out.push_back(detail::map_to_x(st, z));
    bool wrapped = true;
    for (std::size_t pos = cols; pos-- > 0;) {
      if (BigInt(index[pos] + 1) < st.z_multiplicity[pos]) {
        ++index[pos];
        wrapped = false;
        break;
      }
      index[pos] = 0;
    }
    if (wrapped) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace camix
