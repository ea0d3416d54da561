#include "malcev/cosimplicial.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace malcev {

CosimplicialSpace::CosimplicialSpace(std::vector<int> dims,
                                     std::vector<std::vector<Matrix>> cofaces,
                                     std::vector<std::vector<Matrix>> codegeneracies)
    : dims_(std::move(dims)), cofaces_(std::move(cofaces)), codegens_(std::move(codegeneracies)) {
  if (dims_.empty()) throw std::invalid_argument("CosimplicialSpace: need at least level 0");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("CosimplicialSpace: negative level dimension");
  int top = top_level();
  if (static_cast<int>(cofaces_.size()) != top || static_cast<int>(codegens_.size()) != top)
    throw std::invalid_argument(
        "CosimplicialSpace: need one coface family and one codegeneracy family per "
        "adjacent pair of levels");
  for (int n = 0; n < top; ++n) {
    if (static_cast<int>(cofaces_[n].size()) != n + 2)
      throw std::invalid_argument("CosimplicialSpace: level " + std::to_string(n) + " needs " +
                                  std::to_string(n + 2) + " cofaces");
    for (const Matrix& m : cofaces_[n])
      if (m.rows() != dims_[n + 1] || m.cols() != dims_[n])
        throw std::invalid_argument("CosimplicialSpace: coface shape mismatch out of level " +
                                    std::to_string(n));
  }
  for (int n = 1; n <= top; ++n) {
    if (static_cast<int>(codegens_[n - 1].size()) != n)
      throw std::invalid_argument("CosimplicialSpace: level " + std::to_string(n) + " needs " +
                                  std::to_string(n) + " codegeneracies");
    for (const Matrix& m : codegens_[n - 1])
      if (m.rows() != dims_[n - 1] || m.cols() != dims_[n])
        throw std::invalid_argument(
            "CosimplicialSpace: codegeneracy shape mismatch out of level " + std::to_string(n));
  }
}

int CosimplicialSpace::dim(int n) const {
  if (n < 0 || n > top_level())
    throw std::out_of_range("CosimplicialSpace::dim: level out of range");
  return dims_[n];
}

const Matrix& CosimplicialSpace::coface(int n, int i) const {
  if (n < 0 || n >= top_level())
    throw std::out_of_range("CosimplicialSpace::coface: level out of range");
  if (i < 0 || i > n + 1)
    throw std::out_of_range("CosimplicialSpace::coface: index out of range");
  return cofaces_[n][i];
}

const Matrix& CosimplicialSpace::codegeneracy(int n, int j) const {
  if (n < 1 || n > top_level())
    throw std::out_of_range("CosimplicialSpace::codegeneracy: level out of range");
  if (j < 0 || j > n - 1)
    throw std::out_of_range("CosimplicialSpace::codegeneracy: index out of range");
  return codegens_[n - 1][j];
}

CosimplicialSpace constant_cosimplicial(int dim, int top_level) {
  if (dim < 0 || top_level < 0)
    throw std::invalid_argument("constant_cosimplicial: negative dimension or level");
  std::vector<int> dims(top_level + 1, dim);
  std::vector<std::vector<Matrix>> cofaces(top_level);
  std::vector<std::vector<Matrix>> codegens(top_level);
  for (int n = 0; n < top_level; ++n) {
    cofaces[n].assign(n + 2, Matrix::identity(dim));
    codegens[n].assign(n + 1, Matrix::identity(dim));
  }
  return CosimplicialSpace(std::move(dims), std::move(cofaces), std::move(codegens));
}

Matrix moore_differential(const CosimplicialSpace& C, int n) {
  Matrix D(C.dim(n + 1), C.dim(n));
  for (int i = 0; i <= n + 1; ++i)
    D = (i % 2 == 0) ? D + C.coface(n, i) : D - C.coface(n, i);
  return D;
}

CheckReport verify_cosimplicial(const CosimplicialSpace& C) {
  CheckReport rep;
  auto fail = [&](std::string m) {
    rep.pass = false;
    if (rep.failures.size() < 50) rep.failures.push_back(std::move(m));
  };
  int top = C.top_level();

  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        if (!(C.coface(n + 1, j) * C.coface(n, i) == C.coface(n + 1, i) * C.coface(n, j - 1)))
          fail("d^" + std::to_string(j) + " d^" + std::to_string(i) + " != d^" +
               std::to_string(i) + " d^" + std::to_string(j - 1) + " out of level " +
               std::to_string(n));

  for (int n = 2; n <= top; ++n)
    for (int j = 0; j + 1 <= n - 1; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(C.codegeneracy(n - 1, j) * C.codegeneracy(n, i) ==
              C.codegeneracy(n - 1, i) * C.codegeneracy(n, j + 1)))
          fail("s^" + std::to_string(j) + " s^" + std::to_string(i) + " != s^" +
               std::to_string(i) + " s^" + std::to_string(j + 1) + " out of level " +
               std::to_string(n));

  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Matrix lhs = C.codegeneracy(n + 1, j) * C.coface(n, i);
        std::string name = "s^" + std::to_string(j) + " d^" + std::to_string(i);
        if (i == j || i == j + 1) {
          if (!(lhs == Matrix::identity(C.dim(n))))
            fail(name + " != id out of level " + std::to_string(n));
        } else if (i < j) {
          if (!(lhs == C.coface(n - 1, i) * C.codegeneracy(n, j - 1)))
            fail(name + " != d^" + std::to_string(i) + " s^" + std::to_string(j - 1) +
                 " out of level " + std::to_string(n));
        } else {
          if (!(lhs == C.coface(n - 1, i - 1) * C.codegeneracy(n, j)))
            fail(name + " != d^" + std::to_string(i - 1) + " s^" + std::to_string(j) +
                 " out of level " + std::to_string(n));
        }
      }
  return rep;
}

std::vector<int> complex_cohomology(const CochainComplex& K) {
  int levels = static_cast<int>(K.dims.size());
  if (levels == 0) throw std::invalid_argument("complex_cohomology: empty complex");
  if (static_cast<int>(K.differentials.size()) != levels - 1)
    throw std::invalid_argument(
        "complex_cohomology: need one differential per adjacent pair of levels");
  for (int n = 0; n < levels - 1; ++n)
    if (K.differentials[n].rows() != K.dims[n + 1] || K.differentials[n].cols() != K.dims[n])
      throw std::invalid_argument("complex_cohomology: differential shape mismatch at level " +
                                  std::to_string(n));
  for (int n = 0; n + 2 <= levels - 1; ++n)
    if (!(K.differentials[n + 1] * K.differentials[n] == Matrix(K.dims[n + 2], K.dims[n])))
      throw std::logic_error("complex_cohomology: differential does not square to zero at level " +
                             std::to_string(n));
  std::vector<int> h;
  int prev_rank = 0;
  for (int n = 0; n < levels - 1; ++n) {
    int r = rank(K.differentials[n]);
    h.push_back(K.dims[n] - r - prev_rank);
    prev_rank = r;
  }
  return h;
}

NormalizedComplex conormalize(const CosimplicialSpace& C) {
  int top = C.top_level();
  NormalizedComplex out;
  for (int n = 0; n <= top; ++n) {
    Subspace N = Subspace::full(C.dim(n));
    for (int j = 0; j <= n - 1; ++j) N = intersect(N, kernel(C.codegeneracy(n, j)));
    out.levels.push_back(std::move(N));
  }
  for (int n = 0; n <= top; ++n) out.complex.dims.push_back(out.levels[n].dim());
  for (int n = 0; n < top; ++n) {
    Matrix D = moore_differential(C, n);
    const Subspace& src = out.levels[n];
    const Subspace& dst = out.levels[n + 1];
    Matrix restricted(dst.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
      std::optional<Vec> coords = dst.coordinates(D.apply(src.basis()[c]));
      if (!coords)
        throw std::logic_error(
            "conormalize: the differential leaves the normalized subspace at level " +
            std::to_string(n));
      for (int r = 0; r < dst.dim(); ++r)
        if (!(*coords)[r].is_zero()) restricted.set(r, c, (*coords)[r]);
    }
    out.complex.differentials.push_back(std::move(restricted));
  }

  CochainComplex moore;
  for (int n = 0; n <= top; ++n) moore.dims.push_back(C.dim(n));
  for (int n = 0; n < top; ++n) moore.differentials.push_back(moore_differential(C, n));
  if (complex_cohomology(out.complex) != complex_cohomology(moore))
    throw std::logic_error("conormalize: normalized and Moore cohomology disagree");
  return out;
}

Cohomology cohomology(const CosimplicialSpace& C) {
  NormalizedComplex N = conormalize(C);  // includes the Moore cross-check
  Cohomology out;
  out.dims = complex_cohomology(N.complex);

  int top = C.top_level();
  Subspace prev_image = Subspace::zero(C.dim(0));
  for (int n = 0; n < top; ++n) {
    Matrix D = moore_differential(C, n);
    Subspace cocycles = kernel(D);
    std::vector<Vec> reps;
    Subspace have = prev_image;
    for (const Vec& v : cocycles.basis()) {
      Subspace grown = sum(have, Subspace::span(C.dim(n), {v}));
      if (grown.dim() > have.dim()) {
        reps.push_back(v);
        have = grown;
      }
    }
    if (static_cast<int>(reps.size()) != out.dims[n])
      throw std::logic_error("cohomology: representative count disagrees with the rank count");
    out.representatives.push_back(std::move(reps));
    prev_image = column_space(D);
  }
  return out;
}

CosimplicialAlgebra::CosimplicialAlgebra(CosimplicialSpace space, std::vector<Matrix> mult,
                                         std::vector<Vec> unit)
    : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)) {
  int top = space_.top_level();
  if (static_cast<int>(mult_.size()) != top + 1 || static_cast<int>(unit_.size()) != top + 1)
    throw std::invalid_argument("CosimplicialAlgebra: need one product and one unit per level");
  for (int n = 0; n <= top; ++n) {
    int d = space_.dim(n);
    if (mult_[n].rows() != d || mult_[n].cols() != d * d)
      throw std::invalid_argument("CosimplicialAlgebra: product table shape mismatch at level " +
                                  std::to_string(n));
    if (static_cast<int>(unit_[n].size()) != d)
      throw std::invalid_argument("CosimplicialAlgebra: unit size mismatch at level " +
                                  std::to_string(n));
  }
}

const Vec& CosimplicialAlgebra::unit(int level) const {
  if (level < 0 || level > space_.top_level())
    throw std::out_of_range("CosimplicialAlgebra::unit: level out of range");
  return unit_[level];
}

Vec CosimplicialAlgebra::product(int level, const Vec& u, const Vec& v) const {
  int d = space_.dim(level);
  if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
    throw std::invalid_argument("CosimplicialAlgebra::product: cochain size mismatch");
  Vec kron(static_cast<std::size_t>(d) * d, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      if (!v[j].is_zero()) kron[static_cast<std::size_t>(i) * d + j] = u[i] * v[j];
  }
  return mult_[level].apply(kron);
}

Vec CosimplicialAlgebra::basis_product(int level, int i, int j) const {
  int d = space_.dim(level);
  if (i < 0 || i >= d || j < 0 || j >= d)
    throw std::out_of_range("CosimplicialAlgebra::basis_product: index out of range");
  Vec out(d, Rational(0));
  for (int r = 0; r < d; ++r) out[r] = mult_[level].at(r, i * d + j);
  return out;
}

namespace {

Vec matrix_column(const Matrix& m, int c) {
  Vec out(m.rows(), Rational(0));
  for (int r = 0; r < m.rows(); ++r) out[r] = m.at(r, c);
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
  return out;
}

// checks that f: level `from` -> level `to` respects products and units
void check_map_multiplicative(const CosimplicialAlgebra& A, const Matrix& f, int from, int to,
                              const std::string& name,
                              const std::function<void(std::string)>& fail) {
  const CosimplicialSpace& C = A.space();
  int d = C.dim(from);
  std::vector<Vec> cols;
  cols.reserve(d);
  for (int c = 0; c < d; ++c) cols.push_back(matrix_column(f, c));
  if (!is_zero_vec(vec_sub(f.apply(A.unit(from)), A.unit(to))))
    fail(name + " does not preserve the unit");
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec lhs = f.apply(A.basis_product(from, a, b));
      Vec rhs = A.product(to, cols[a], cols[b]);
      if (!is_zero_vec(vec_sub(lhs, rhs))) {
        fail(name + " is not multiplicative on basis pair (" + std::to_string(a) + "," +
             std::to_string(b) + ")");
        return;
      }
    }
}

}  // namespace

CheckReport verify_cosimplicial_algebra(const CosimplicialAlgebra& A) {
  const CosimplicialSpace& C = A.space();
  CheckReport rep = verify_cosimplicial(C);
  auto fail = [&](std::string m) {
    rep.pass = false;
    if (rep.failures.size() < 50) rep.failures.push_back(std::move(m));
  };

  for (int n = 0; n <= C.top_level(); ++n) {
    int d = C.dim(n);
    // products of basis vectors, kept sparse for the associativity sweep
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table(
        d, std::vector<std::vector<std::pair<int, Rational>>>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vec p = A.basis_product(n, i, j);
        for (int r = 0; r < d; ++r)
          if (!p[r].is_zero()) table[i][j].push_back({r, p[r]});
      }

    bool unit_ok = true;
    for (int i = 0; i < d && unit_ok; ++i) {
      Vec e(d, Rational(0));
      e[i] = Rational(1);
      if (!is_zero_vec(vec_sub(A.product(n, A.unit(n), e), e)) ||
          !is_zero_vec(vec_sub(A.product(n, e, A.unit(n)), e))) {
        fail("unit fails at level " + std::to_string(n) + " on basis vector " + std::to_string(i));
        unit_ok = false;
      }
    }

    bool comm_ok = true;
    for (int i = 0; i < d && comm_ok; ++i)
      for (int j = i + 1; j < d && comm_ok; ++j)
        if (table[i][j] != table[j][i]) {
          fail("product not commutative at level " + std::to_string(n) + " on pair (" +
               std::to_string(i) + "," + std::to_string(j) + ")");
          comm_ok = false;
        }

    bool assoc_ok = true;
    for (int i = 0; i < d && assoc_ok; ++i)
      for (int j = 0; j < d && assoc_ok; ++j)
        for (int k = 0; k < d && assoc_ok; ++k) {
          Vec lhs(d, Rational(0)), rhs(d, Rational(0));
          for (const auto& [r, c] : table[i][j])
            for (const auto& [s, w] : table[r][k]) lhs[s] = lhs[s] + c * w;
          for (const auto& [r, c] : table[j][k])
            for (const auto& [s, w] : table[i][r]) rhs[s] = rhs[s] + c * w;
          if (!is_zero_vec(vec_sub(lhs, rhs))) {
            fail("product not associative at level " + std::to_string(n) + " on triple (" +
                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            assoc_ok = false;
          }
        }
  }

  for (int n = 0; n < C.top_level(); ++n)
    for (int i = 0; i <= n + 1; ++i)
      check_map_multiplicative(A, C.coface(n, i), n, n + 1,
                               "coface d^" + std::to_string(i) + " out of level " +
                                   std::to_string(n),
                               fail);
  for (int n = 1; n <= C.top_level(); ++n)
    for (int j = 0; j <= n - 1; ++j)
      check_map_multiplicative(A, C.codegeneracy(n, j), n, n - 1,
                               "codegeneracy s^" + std::to_string(j) + " out of level " +
                                   std::to_string(n),
                               fail);
  return rep;
}

Vec aw_cup(const CosimplicialAlgebra& A, int n, const Vec& u, int m, const Vec& v) {
  const CosimplicialSpace& C = A.space();
  if (n < 0 || m < 0) throw std::invalid_argument("aw_cup: negative cochain level");
  if (n + m > C.top_level())
    throw std::out_of_range("aw_cup: product would land above the top level; rejected, not truncated");
  if (static_cast<int>(u.size()) != C.dim(n) || static_cast<int>(v.size()) != C.dim(m))
    throw std::invalid_argument("aw_cup: cochain size mismatch");
  Vec front = u;
  for (int lv = n; lv < n + m; ++lv) front = C.coface(lv, lv + 1).apply(front);
  Vec back = v;
  for (int lv = m; lv < n + m; ++lv) back = C.coface(lv, 0).apply(back);
  return A.product(n + m, front, back);
}

namespace {

void codegeneracy_composites(const CosimplicialSpace& C, int cur, int remaining,
                             const Matrix& acc, std::vector<Matrix>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int j = 0; j <= cur - 1; ++j)
    codegeneracy_composites(C, cur - 1, remaining - 1, C.codegeneracy(cur, j) * acc, out);
}

}  // namespace

std::vector<Subspace> hodge_filtration(const CosimplicialSpace& C, int i) {
  if (i < 0) throw std::invalid_argument("hodge_filtration: negative filtration step");
  int top = C.top_level();
  std::vector<Subspace> fil;
  for (int n = 0; n <= top; ++n) {
    if (i == 0) {
      fil.push_back(Subspace::full(C.dim(n)));
      continue;
    }
    if (n < i) {
      fil.push_back(Subspace::zero(C.dim(n)));
      continue;
    }
    std::vector<Matrix> comps;
    codegeneracy_composites(C, n, n + 1 - i, Matrix::identity(C.dim(n)), comps);
    Subspace s = Subspace::full(C.dim(n));
    for (const Matrix& m : comps) s = intersect(s, kernel(m));
    fil.push_back(std::move(s));
  }

  for (int n = 0; n < top; ++n)
    for (int idx = 0; idx <= n + 1; ++idx)
      if (!fil[n + 1].contains(fil[n].apply(C.coface(n, idx))))
        throw std::logic_error("hodge_filtration: result is not stable under cofaces");
  for (int n = 1; n <= top; ++n)
    for (int j = 0; j <= n - 1; ++j)
      if (!fil[n - 1].contains(fil[n].apply(C.codegeneracy(n, j))))
        throw std::logic_error("hodge_filtration: result is not stable under codegeneracies");
  return fil;
}

}  // namespace malcev
