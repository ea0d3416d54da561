#include "malcev/matrix.hpp"

#include <stdexcept>

namespace malcev {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("Matrix::from_rows: ragged input");
    for (int j = 0; j < cols; ++j)
      if (!rows[i][j].is_zero()) m.data_[i].emplace(j, rows[i][j]);
  }
  return m;
}

void Matrix::check(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("Matrix: index out of range");
}

std::size_t Matrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational Matrix::at(int i, int j) const {
  check(i, j);
  auto it = data_[i].find(j);
  return it == data_[i].end() ? Rational() : it->second;
}

void Matrix::set(int i, int j, const Rational& v) {
  check(i, j);
  if (v.is_zero())
    data_[i].erase(j);
  else
    data_[i][j] = v;
}

void Matrix::add_to(int i, int j, const Rational& v) {
  check(i, j);
  auto it = data_[i].find(j);
  if (it == data_[i].end()) {
    if (!v.is_zero()) data_[i].emplace(j, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) data_[i].erase(it);
}

const std::map<int, Rational>& Matrix::row(int i) const {
  if (i < 0 || i >= rows_) throw std::out_of_range("Matrix::row: index out of range");
  return data_[i];
}

Vec Matrix::row_dense(int i) const {
  Vec v(cols_);
  for (const auto& [j, c] : data_[i]) v[j] = c;
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, c] : data_[i]) t.data_[j].emplace(i, c);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("Matrix::apply: size mismatch");
  Vec y(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc;
    for (const auto& [j, c] : data_[i]) acc += c * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : o.data_[k]) r.add_to(i, j, a * b);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, c] : o.data_[i]) r.add_to(i, j, c);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Rational(-1)); }

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(rows_, cols_);
  if (c.is_zero()) return r;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) r.data_[i].emplace(j, c * v);
  return r;
}

Matrix Matrix::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
  if (e < 0) throw std::invalid_argument("Matrix::pow: negative exponent");
  Matrix acc = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const Matrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::map<int, Rational>> work(rows);
  for (int i = 0; i < rows; ++i) work[i] = m.row(i);

  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      auto it = work[i].find(col);
      if (it != work[i].end()) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(work[r], work[sel]);
    Rational inv = work[r][col].reciprocal();
    if (!(inv == Rational(1))) {
      for (auto& [j, c] : work[r]) c *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto it = work[i].find(col);
      if (it == work[i].end()) continue;
      Rational f = it->second;
      for (const auto& [j, c] : work[r]) {
        Rational delta = f * c;
        auto jt = work[i].find(j);
        if (jt == work[i].end()) {
          work[i].emplace(j, -delta);
        } else {
          jt->second -= delta;
          if (jt->second.is_zero()) work[i].erase(jt);
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }

  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, c] : work[i]) out.set(i, j, c);
  return {out, pivots};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

}  // namespace malcev
