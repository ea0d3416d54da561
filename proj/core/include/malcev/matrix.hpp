#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

using Vec = std::vector<Rational>;

/// Sparse exact matrix over the rationals.  Zero entries are never stored,
/// indices are bounds-checked.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzero_count() const;

  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& v);
  void add_to(int i, int j, const Rational& v);
  const std::map<int, Rational>& row(int i) const;
  Vec row_dense(int i) const;

  Matrix transpose() const;
  Vec apply(const Vec& x) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix pow(int e) const;

  bool operator==(const Matrix& o) const;

private:
  void check(int i, int j) const;
  int rows_ = 0, cols_ = 0;
  std::vector<std::map<int, Rational>> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

}  // namespace malcev
