#include "malcev/subspace.hpp"

#include <stdexcept>

namespace malcev {

namespace {
bool all_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}
}  // namespace

Subspace Subspace::zero(int ambient) {
  if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  Matrix id = Matrix::identity(ambient);
  return row_space(id);
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("Subspace::span: vector length mismatch");
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult rr = rref(m);
  Subspace s;
  s.ambient_ = m.cols();
  s.pivots_ = rr.pivot_cols;
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    s.basis_.push_back(rr.reduced.row_dense(static_cast<int>(i)));
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::reduce: vector length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Rational f = c;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return all_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Subspace Subspace::apply(const Matrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("Subspace::apply: shape mismatch");
  std::vector<Vec> images;
  images.reserve(basis_.size());
  for (const auto& v : basis_) images.push_back(m.apply(v));
  return span(m.rows(), images);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> rows = a.basis_;
  rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  // Solve u*A = v*B: kernel of the matrix whose columns are A-basis then
  // negated B-basis, written over the ambient coordinates.
  int da = a.dim(), db = b.dim();
  Matrix c(a.ambient_, da + db);
  for (int k = 0; k < da; ++k)
    for (int j = 0; j < a.ambient_; ++j)
      if (!a.basis_[k][j].is_zero()) c.set(j, k, a.basis_[k][j]);
  for (int k = 0; k < db; ++k)
    for (int j = 0; j < b.ambient_; ++j)
      if (!b.basis_[k][j].is_zero()) c.set(j, da + k, -b.basis_[k][j]);
  Subspace ker = kernel(c);
  std::vector<Vec> vectors;
  for (const auto& w : ker.basis()) {
    Vec v(a.ambient_);
    for (int k = 0; k < da; ++k)
      if (!w[k].is_zero())
        for (int j = 0; j < a.ambient_; ++j) v[j] += w[k] * a.basis_[k][j];
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.ambient_, vectors);
}

Subspace kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> vectors;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      Rational c = rr.reduced.at(static_cast<int>(i), f);
      if (!c.is_zero()) v[rr.pivot_cols[i]] = -c;
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(cols, vectors);
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace malcev
