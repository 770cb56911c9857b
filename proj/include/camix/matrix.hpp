#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "camix/arith.hpp"
#include "camix/errors.hpp"

namespace camix {

// Dense row-major integer matrix with arbitrary-precision entries.
// Rows hold one congruence each when used as the left side of A·x ≡ b (mod m).
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ContractViolation("IntMatrix: entry count " + std::to_string(entries_.size()) +
                              " does not equal rows*cols = " + std::to_string(rows_ * cols_));
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ContractViolation("IntMatrix multiply: " + std::to_string(a.cols_) +
                              " columns vs " + std::to_string(b.rows_) + " rows");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  // A·x for a residue vector x.
  std::vector<BigInt> apply(const std::vector<Symbol>& x) const {
    if (x.size() != cols_)
      throw ContractViolation("IntMatrix apply: vector length " + std::to_string(x.size()) +
                              " does not match " + std::to_string(cols_) + " columns");
    std::vector<BigInt> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
  }

  IntMatrix reduced_mod(Symbol m) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mod_reduce(entries_[i], m);
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination. The 0x0 matrix
// has determinant 1, so unimodularity checks work for empty decompositions.
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols())
    throw ContractViolation("determinant: matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == k) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace camix
