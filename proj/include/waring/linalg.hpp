#pragma once

// Small dense exact linear algebra: rank, row reduction and solving over Q,
// and integer column echelon forms for lattice questions over Z.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    }
    return m;
  }

  friend Matrix operator*(const Matrix& l, const Matrix& r) {
    if (l.cols_ != r.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(l.rows_, r.cols_);
    for (std::size_t i = 0; i < l.rows_; ++i) {
      for (std::size_t k = 0; k < l.cols_; ++k) {
        if (l(i, k) == 0) continue;
        for (std::size_t j = 0; j < r.cols_; ++j) out(i, j) += l(i, k) * r(k, j);
      }
    }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// Clears denominators row by row, giving an integer matrix of equal rank.
inline IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return out;
}

/// Rank by fraction-free (Bareiss) elimination over Z.
inline std::size_t rank(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

inline std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

/// Reduced row echelon form over Q together with the pivot columns.
struct RowReduction {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline RowReduction rref(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv_pivot = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Some solution of m x = rhs over Q (free variables set to zero).
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                                  const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length differs");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto [reduced, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

/// Basis of the right kernel {x : m x = 0} over Q.
inline std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return reduced.columns(n, n);
}

/// Column echelon form over Z: a * transform = echelon, with transform
/// unimodular. Column k < rank has its leading nonzero (positive) entry in
/// row pivot_rows[k]; the remaining columns of echelon are zero and the
/// matching columns of transform span the integer kernel.
struct ColumnEchelon {
  IntegerMatrix echelon;
  IntegerMatrix transform;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return pivot_rows.size(); }
};

inline ColumnEchelon column_echelon(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.cols());
  std::vector<std::size_t> pivot_rows;
  auto column_combine = [](IntegerMatrix& m, std::size_t c1, std::size_t c2, const Integer& p,
                           const Integer& q, const Integer& r, const Integer& s) {
    // (c1, c2) <- (p*c1 + q*c2, r*c1 + s*c2)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer x = m(i, c1);
      Integer y = m(i, c2);
      m(i, c1) = p * x + q * y;
      m(i, c2) = r * x + s * y;
    }
  };
  std::size_t col = 0;
  for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
    for (std::size_t j = col + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0) continue;
      const Integer x = h(row, col);
      const Integer y = h(row, j);
      Integer g;
      Integer s;
      Integer t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [s  -y/g; t  x/g] has determinant 1.
      const Integer yg = y / g;
      const Integer xg = x / g;
      column_combine(h, col, j, s, t, Integer(-yg), xg);
      column_combine(u, col, j, s, t, Integer(-yg), xg);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, col) = -h(i, col);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, col) = -u(i, col);
    }
    pivot_rows.push_back(row);
    ++col;
  }
  return {std::move(h), std::move(u), std::move(pivot_rows)};
}

/// Some integer solution of a x = rhs, or nothing if none exists.
inline std::optional<std::vector<Integer>> integer_solve(const IntegerMatrix& a,
                                                         const std::vector<Integer>& rhs) {
  if (rhs.size() != a.rows()) throw DimensionMismatch("right-hand side length differs");
  const ColumnEchelon ce = column_echelon(a);
  std::vector<Integer> z(a.cols(), Integer(0));
  std::size_t k = 0;
  for (std::size_t row = 0; row < a.rows(); ++row) {
    Integer residual = rhs[row];
    const std::size_t known = k;
    for (std::size_t j = 0; j < known; ++j) residual -= ce.echelon(row, j) * z[j];
    if (k < ce.rank() && ce.pivot_rows[k] == row) {
      if (residual % ce.echelon(row, k) != 0) return std::nullopt;
      z[k] = residual / ce.echelon(row, k);
      ++k;
    } else if (residual != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < ce.rank(); ++j) x[i] += ce.transform(i, j) * z[j];
  }
  return x;
}

/// Exponent of Z^m / L for a full-rank lattice L spanned by the columns of
/// a: the least t > 0 with t Z^m contained in L.
inline Integer lattice_exponent(const IntegerMatrix& a) {
  const ColumnEchelon ce = column_echelon(a);
  const std::size_t m = a.rows();
  if (ce.rank() != m) throw std::invalid_argument("lattice generators do not have full rank");
  RationalMatrix basis(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) basis(i, j) = Rational(ce.echelon(i, j));
  }
  const auto inv = inverse(basis);
  Integer t = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t = lcm(t, (*inv)(i, j).get_den());
  }
  return t;
}

}  // namespace waring
