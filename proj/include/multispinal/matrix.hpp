#pragma once

#include <utility>
#include <vector>

#include "multispinal/rational.hpp"

namespace multispinal {

// Dense row-major matrix over exact rationals. Elimination always takes the
// first nonzero pivot in column order, so traces are reproducible.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_symmetric() const;
  RationalMatrix transpose() const;

  bool operator==(const RationalMatrix& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

  BigInt& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntMatrix& other) const = default;
};

// Exact solution of M x = rhs, verified by substitution (residual exactly
// zero). Throws Error("Singular") when no solution pivot exists.
std::vector<Rational> solve(const RationalMatrix& M, const std::vector<Rational>& rhs);

// Fraction-free Bareiss elimination over the integers.
BigInt determinant(const IntMatrix& M);

// Clears denominators globally, runs Bareiss, rescales back.
Rational determinant(const RationalMatrix& M);

int rank(const RationalMatrix& M);

// scale = least common denominator over all entries, N = scale * M entrywise.
std::pair<BigInt, IntMatrix> integer_form(const RationalMatrix& M);

// Coefficients c[0..n] of det(tI + M) (monic, the characteristic polynomial
// of -M), computed exactly by evaluation at t = 0..n and interpolation.
std::vector<Rational> char_poly(const RationalMatrix& M);

// Positive semidefiniteness for symmetric M, decided exactly: M is PSD iff
// every coefficient of det(tI + M) is >= 0 (symmetric means real-rooted, so
// nonnegative coefficients exactly exclude roots > 0, i.e. eigenvalues < 0).
// Throws Error("NotSymmetric").
bool is_psd(const RationalMatrix& M);

}  // namespace multispinal
