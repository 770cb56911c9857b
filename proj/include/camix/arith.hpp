#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "camix/errors.hpp"

namespace camix {

// Exact integer / rational arithmetic used throughout. Intermediate values
// (Smith normal form pivots, solution counts) have no fixed-width contract,
// so everything that can grow lives in BigInt.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Coord = std::int64_t;   // cell coordinate / window bound
using Symbol = std::int64_t;  // residue in [0, m)

inline BigInt pow_int(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// Residue of x mod m in [0, m).
inline Symbol mod_reduce(const BigInt& x, Symbol m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return static_cast<Symbol>(r);
}

inline Symbol mod_reduce(Symbol x, Symbol m) {
  Symbol r = x % m;
  return r < 0 ? r + m : r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline Symbol mod_inverse(Symbol a, Symbol m) {
  Symbol old_r = mod_reduce(a, m), r = m;
  Symbol old_s = 1, s = 0;
  while (r != 0) {
    Symbol q = old_r / r;
    Symbol t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw ContractViolation("mod_inverse: " + std::to_string(a) + " is not a unit mod " +
                            std::to_string(m));
  return mod_reduce(old_s, m);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace camix
