#include "multispinal/matrix.hpp"

#include "multispinal/errors.hpp"

namespace multispinal {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw Error("BadDimension", "matrix dimensions must be positive");
  data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] != other.data_[k]) return false;
  }
  return true;
}

std::vector<Rational> solve(const RationalMatrix& M, const std::vector<Rational>& rhs) {
  if (M.rows() != M.cols()) throw Error("BadDimension", "solve needs a square matrix");
  const int n = M.rows();
  if (static_cast<int>(rhs.size()) != n)
    throw Error("BadDimension", "right-hand side length does not match");

  // Gauss-Jordan over the rationals, first nonzero pivot per column.
  RationalMatrix w = M;
  std::vector<Rational> b = rhs;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("Singular", "no pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
    }
    const Rational inv_p = 1 / w.at(col, col);
    for (int j = col; j < n; ++j) w.at(col, j) *= inv_p;
    b[static_cast<size_t>(col)] *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      const Rational f = w.at(r, col);
      for (int j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
    }
  }

  // The solution is exact; a nonzero residual would be a defect, not noise.
  for (int i = 0; i < n; ++i) {
    Rational acc(0);
    for (int j = 0; j < n; ++j) acc += M.at(i, j) * b[static_cast<size_t>(j)];
    if (acc != rhs[static_cast<size_t>(i)])
      throw Defect("InternalSingular", "nonzero residual in exact solve, row " + std::to_string(i));
  }
  return b;
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows != M.cols) throw Error("BadDimension", "determinant needs a square matrix");
  const int n = M.rows;
  IntMatrix w = M;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (w.at(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
        // Bareiss guarantees exactness of this division.
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : BigInt(-w.at(n - 1, n - 1));
}

std::pair<BigInt, IntMatrix> integer_form(const RationalMatrix& M) {
  BigInt scale(1);
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      BigInt den = M.at(i, j).get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
    }
  }
  IntMatrix N(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      Rational scaled = M.at(i, j) * Rational(scale);
      if (scaled.get_den() != 1)
        throw Defect("InternalSingular", "denominator survived clearing");
      N.at(i, j) = scaled.get_num();
    }
  }
  return {scale, N};
}

Rational determinant(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw Error("BadDimension", "determinant needs a square matrix");
  auto [scale, N] = integer_form(M);
  BigInt det_scaled = determinant(N);
  // det(scale * M) = scale^n det(M)
  BigInt denom(1);
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(M.rows()));
  return make_rational(det_scaled, denom);
}

int rank(const RationalMatrix& M) {
  RationalMatrix w = M;
  const int rows = w.rows();
  const int cols = w.cols();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
    }
    const Rational inv_p = 1 / w.at(r, col);
    for (int j = col; j < cols; ++j) w.at(r, j) *= inv_p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w.at(i, col) == 0) continue;
      const Rational f = w.at(i, col);
      for (int j = col; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rational> char_poly(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw Error("BadDimension", "char_poly needs a square matrix");
  const int n = M.rows();

  // Evaluate det(tI + M) at t = 0..n, then interpolate by Newton divided
  // differences. Everything stays rational.
  std::vector<Rational> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    RationalMatrix shifted = M;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += t;
    values.push_back(determinant(shifted));
  }

  std::vector<Rational> dd = values;  // dd[i] becomes the i-th divided difference
  for (int level = 1; level <= n; ++level) {
    for (int i = n; i >= level; --i) {
      dd[static_cast<size_t>(i)] =
          (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) / Rational(level);
    }
  }

  // Expand sum_i dd[i] * (t - 0)(t - 1)...(t - (i-1)) into monomials.
  std::vector<Rational> coeff(static_cast<size_t>(n) + 1, Rational(0));
  std::vector<Rational> basis(static_cast<size_t>(n) + 1, Rational(0));
  basis[0] = 1;  // running product, degree i after i steps
  int deg = 0;
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= deg; ++k)
      coeff[static_cast<size_t>(k)] += dd[static_cast<size_t>(i)] * basis[static_cast<size_t>(k)];
    if (i == n) break;
    // multiply basis by (t - i)
    for (int k = deg + 1; k >= 1; --k)
      basis[static_cast<size_t>(k)] = basis[static_cast<size_t>(k - 1)] - Rational(i) * basis[static_cast<size_t>(k)];
    basis[0] *= Rational(-i);
    ++deg;
  }

  if (coeff[static_cast<size_t>(n)] != 1)
    throw Defect("InternalSingular", "characteristic polynomial is not monic");
  return coeff;
}

bool is_psd(const RationalMatrix& M) {
  if (!M.is_symmetric()) throw Error("NotSymmetric", "is_psd needs a symmetric matrix");
  // Symmetric matrices are real-rooted, so det(tI + M) has all roots <= 0
  // (every eigenvalue >= 0) exactly when all coefficients are >= 0.
  for (const Rational& c : char_poly(M)) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace multispinal
