#include "malcev/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace malcev {

namespace {

void sv_add(SparseVec& acc, const SparseVec& other, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [i, c] : other) {
    auto it = acc.find(i);
    if (it == acc.end()) {
      acc.emplace(i, scale * c);
    } else {
      it->second += scale * c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

// Builds the Hall basis and its structure constants for a free nilpotent
// algebra.  Rewriting follows the classical Jacobi expansion
//   [u,[a,b]] = [[u,a],b] + [a,[u,b]]   (u < [a,b], a > u)
// into the Hall set {[u,v] : u < v, v a generator or left(v) <= u}, with the
// global basis index serving as the canonical total order (degree first,
// then left/right recursively, generators in input order).
class FreeBuilder {
public:
  FreeBuilder(const std::vector<Generator>& gens, int class_bound)
      : class_bound_(class_bound) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      BasisElement e;
      e.degree = 1;
      e.weight = gens[i].weight;
      e.name = gens[i].name;
      e.generator = static_cast<int>(i);
      basis_.push_back(std::move(e));
    }
    build_basis();
    fill_table();
  }

  std::vector<BasisElement> take_basis() { return std::move(basis_); }
  std::map<std::pair<int, int>, SparseVec> take_table() { return std::move(table_); }

private:
  bool is_hall_pair(int u, int v) const {
    // precondition u < v
    if (basis_[v].degree == 1) return true;
    return basis_[v].left <= u;
  }

  void build_basis() {
    int prev_start = 0;
    for (int d = 2; d <= class_bound_; ++d) {
      std::vector<std::pair<int, int>> pairs;
      int total = static_cast<int>(basis_.size());
      for (int u = 0; u < total; ++u) {
        int du = basis_[u].degree;
        if (du >= d) break;
        for (int v = u + 1; v < total; ++v) {
          if (basis_[u].degree + basis_[v].degree != d) continue;
          if (is_hall_pair(u, v)) pairs.emplace_back(u, v);
        }
      }
      std::sort(pairs.begin(), pairs.end());
      for (const auto& [u, v] : pairs) {
        BasisElement e;
        e.degree = d;
        e.weight = basis_[u].weight + basis_[v].weight;
        e.name = "[" + basis_[u].name + "," + basis_[v].name + "]";
        e.left = u;
        e.right = v;
        int idx = static_cast<int>(basis_.size());
        basis_.push_back(std::move(e));
        child_index_[{u, v}] = idx;
      }
      (void)prev_start;
    }
  }

  SparseVec pair_bracket(int x, int y) {
    if (x == y) return {};
    if (x > y) {
      SparseVec r;
      sv_add(r, rewrite(y, x), Rational(-1));
      return r;
    }
    return rewrite(x, y);
  }

  const SparseVec& rewrite(int u, int v) {
    // u < v, returns [e_u, e_v] over the Hall basis
    auto key = std::make_pair(u, v);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    if (basis_[u].degree + basis_[v].degree > class_bound_) {
      return memo_.emplace(key, SparseVec{}).first->second;
    }
    if (!in_progress_.insert(key).second)
      throw std::logic_error("hall rewriting: unexpected cycle");

    SparseVec result;
    if (is_hall_pair(u, v)) {
      result.emplace(child_index_.at(key), Rational(1));
    } else {
      int a = basis_[v].left, b = basis_[v].right;
      // [[u,a],b]
      sv_add(result, sv_bracket(pair_bracket(u, a), unit(b)), Rational(1));
      // [a,[u,b]]
      sv_add(result, sv_bracket(unit(a), pair_bracket(u, b)), Rational(1));
    }
    in_progress_.erase(key);
    return memo_.emplace(key, std::move(result)).first->second;
  }

  static SparseVec unit(int i) { return SparseVec{{i, Rational(1)}}; }

  SparseVec sv_bracket(const SparseVec& xs, const SparseVec& ys) {
    SparseVec acc;
    for (const auto& [i, ci] : xs)
      for (const auto& [j, cj] : ys) sv_add(acc, pair_bracket(i, j), ci * cj);
    return acc;
  }

  void fill_table() {
    int total = static_cast<int>(basis_.size());
    for (int a = 0; a < total; ++a)
      for (int b = a + 1; b < total; ++b) {
        if (basis_[a].degree + basis_[b].degree > class_bound_) continue;
        table_[{a, b}] = rewrite(a, b);
      }
  }

  int class_bound_;
  std::vector<BasisElement> basis_;
  std::map<std::pair<int, int>, int> child_index_;
  std::map<std::pair<int, int>, SparseVec> memo_;
  std::set<std::pair<int, int>> in_progress_;
  std::map<std::pair<int, int>, SparseVec> table_;
};

}  // namespace

// ---- LieElement ----

LieElement::LieElement(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("LieElement: null algebra");
}

LieElement LieElement::basis(AlgebraPtr alg, int index) {
  LieElement e(std::move(alg));
  if (index < 0 || index >= e.alg_->total_dim())
    throw std::out_of_range("LieElement::basis: index out of range");
  e.coeff_.emplace(index, Rational(1));
  return e;
}

Rational LieElement::coefficient(int index) const {
  auto it = coeff_.find(index);
  return it == coeff_.end() ? Rational() : it->second;
}

void LieElement::set_coefficient(int index, const Rational& c) {
  if (index < 0 || index >= alg_->total_dim())
    throw std::out_of_range("LieElement::set_coefficient: index out of range");
  if (c.is_zero())
    coeff_.erase(index);
  else
    coeff_[index] = c;
}

void LieElement::check_same(const LieElement& o) const {
  if (alg_.get() != o.alg_.get())
    throw std::invalid_argument("LieElement: algebra mismatch");
}

LieElement LieElement::operator-() const { return scaled(Rational(-1)); }

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same(o);
  sv_add(coeff_, o.coeff_, Rational(1));
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same(o);
  sv_add(coeff_, o.coeff_, Rational(-1));
  return *this;
}

LieElement LieElement::scaled(const Rational& c) const {
  LieElement r(alg_);
  if (!c.is_zero())
    for (const auto& [i, v] : coeff_) r.coeff_.emplace(i, c * v);
  return r;
}

bool LieElement::operator==(const LieElement& o) const {
  return alg_.get() == o.alg_.get() && coeff_ == o.coeff_;
}

Vec LieElement::degree_coords(int degree) const {
  int off = alg_->degree_offset(degree);
  int dim = alg_->degree_dim(degree);
  Vec v(dim);
  auto it = coeff_.lower_bound(off);
  for (; it != coeff_.end() && it->first < off + dim; ++it) v[it->first - off] = it->second;
  return v;
}

Vec LieElement::total_coords() const {
  Vec v(alg_->total_dim());
  for (const auto& [i, c] : coeff_) v[i] = c;
  return v;
}

bool LieElement::homogeneous_degree(int* degree_out) const {
  if (coeff_.empty()) return false;
  int d = alg_->element(coeff_.begin()->first).degree;
  for (const auto& [i, c] : coeff_)
    if (alg_->element(i).degree != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

std::string LieElement::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeff_) {
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = abs(c);
    if (!(a == Rational(1))) os << a.str() << " ";
    os << alg_->element(i).name;
    first = false;
  }
  return os.str();
}

// ---- GradedLieAlgebra ----

AlgebraPtr GradedLieAlgebra::free_nilpotent(const std::vector<Generator>& generators,
                                            int class_bound) {
  if (class_bound < 1 || class_bound > 12)
    throw std::invalid_argument("free_nilpotent: class bound must be in 1..12");
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw std::invalid_argument("free_nilpotent: empty generator name");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("free_nilpotent: duplicate generator name '" + g.name + "'");
    if (g.weight > -1)
      throw std::invalid_argument("free_nilpotent: generator weight must be <= -1");
  }

  FreeBuilder builder(generators, class_bound);
  auto alg = std::shared_ptr<GradedLieAlgebra>(new GradedLieAlgebra());
  alg->free_ = true;
  alg->class_bound_ = class_bound;
  alg->basis_ = builder.take_basis();
  alg->table_ = builder.take_table();
  alg->witnesses_.assign(alg->basis_.size(), std::nullopt);
  alg->dims_.assign(class_bound, 0);
  for (const auto& e : alg->basis_) alg->dims_[e.degree - 1]++;
  alg->offsets_.assign(class_bound + 1, 0);
  for (int d = 1; d <= class_bound; ++d)
    alg->offsets_[d] = alg->offsets_[d - 1] + alg->dims_[d - 1];
  return alg;
}

AlgebraPtr GradedLieAlgebra::from_parts(std::vector<BasisElement> basis,
                                        std::map<std::pair<int, int>, SparseVec> table,
                                        int class_bound,
                                        std::vector<std::optional<Witness>> witnesses) {
  if (class_bound < 1) throw std::invalid_argument("from_parts: class bound must be >= 1");
  if (witnesses.size() != basis.size())
    throw std::invalid_argument("from_parts: witness count mismatch");
  int total = static_cast<int>(basis.size());
  for (int i = 1; i < total; ++i)
    if (basis[i].degree < basis[i - 1].degree)
      throw std::invalid_argument("from_parts: basis not sorted by degree");
  for (const auto& [key, val] : table) {
    if (key.first < 0 || key.second >= total || key.first >= key.second)
      throw std::invalid_argument("from_parts: bad structure constant key");
    for (const auto& [i, c] : val)
      if (i < 0 || i >= total) throw std::invalid_argument("from_parts: bad structure index");
  }
  auto alg = std::shared_ptr<GradedLieAlgebra>(new GradedLieAlgebra());
  alg->free_ = false;
  alg->class_bound_ = class_bound;
  alg->basis_ = std::move(basis);
  alg->table_ = std::move(table);
  alg->witnesses_ = std::move(witnesses);
  alg->dims_.assign(class_bound, 0);
  for (const auto& e : alg->basis_) {
    if (e.degree < 1 || e.degree > class_bound)
      throw std::invalid_argument("from_parts: element degree out of range");
    alg->dims_[e.degree - 1]++;
  }
  alg->offsets_.assign(class_bound + 1, 0);
  for (int d = 1; d <= class_bound; ++d)
    alg->offsets_[d] = alg->offsets_[d - 1] + alg->dims_[d - 1];
  return alg;
}

int GradedLieAlgebra::degree_dim(int degree) const {
  if (degree < 1 || degree > class_bound_) return 0;
  return dims_[degree - 1];
}

int GradedLieAlgebra::degree_offset(int degree) const {
  if (degree < 1 || degree > class_bound_)
    throw std::out_of_range("GradedLieAlgebra::degree_offset: degree out of range");
  return offsets_[degree - 1];
}

const BasisElement& GradedLieAlgebra::element(int index) const {
  if (index < 0 || index >= total_dim())
    throw std::out_of_range("GradedLieAlgebra::element: index out of range");
  return basis_[index];
}

const std::optional<GradedLieAlgebra::Witness>& GradedLieAlgebra::witness(int index) const {
  if (index < 0 || index >= total_dim())
    throw std::out_of_range("GradedLieAlgebra::witness: index out of range");
  return witnesses_[index];
}

SparseVec GradedLieAlgebra::basis_bracket(int a, int b) const {
  if (a < 0 || a >= total_dim() || b < 0 || b >= total_dim())
    throw std::out_of_range("basis_bracket: index out of range");
  if (a == b) return {};
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = table_.find({a, b});
  if (it == table_.end()) return {};  // beyond the class bound
  if (!flip) return it->second;
  SparseVec r;
  sv_add(r, it->second, Rational(-1));
  return r;
}

LieElement GradedLieAlgebra::zero() const { return LieElement(shared_from_this()); }

LieElement GradedLieAlgebra::basis_element(int index) const {
  return LieElement::basis(shared_from_this(), index);
}

LieElement GradedLieAlgebra::generator(const std::string& name) const {
  for (int i = 0; i < degree_dim(1); ++i)
    if (basis_[i].name == name) return basis_element(i);
  throw std::invalid_argument("unknown generator name '" + name + "'");
}

LieElement GradedLieAlgebra::from_degree_coords(int degree, const Vec& coords) const {
  if (static_cast<int>(coords.size()) != degree_dim(degree))
    throw std::invalid_argument("from_degree_coords: size mismatch");
  LieElement e(shared_from_this());
  int off = degree_offset(degree);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) e.set_coefficient(off + static_cast<int>(i), coords[i]);
  return e;
}

LieElement GradedLieAlgebra::from_total_coords(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != total_dim())
    throw std::invalid_argument("from_total_coords: size mismatch");
  LieElement e(shared_from_this());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) e.set_coefficient(static_cast<int>(i), coords[i]);
  return e;
}

// ---- free functions ----

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.algebra().get() != y.algebra().get())
    throw std::invalid_argument("bracket: algebra mismatch");
  const GradedLieAlgebra& alg = *x.algebra();
  LieElement r(x.algebra());
  SparseVec acc;
  for (const auto& [i, ci] : x.coefficients())
    for (const auto& [j, cj] : y.coefficients())
      sv_add(acc, alg.basis_bracket(i, j), ci * cj);
  for (const auto& [i, c] : acc) r.set_coefficient(i, c);
  return r;
}

namespace {
int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}
}  // namespace

long long witt_dim(int num_generators, int degree) {
  if (num_generators < 0 || degree < 1)
    throw std::invalid_argument("witt_dim: bad arguments");
  mpz_class total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(num_generators),
                  static_cast<unsigned long>(degree / d));
    total += mu * power;
  }
  mpz_class result = total / degree;
  if (!result.fits_slong_p()) throw std::overflow_error("witt_dim: result too large");
  return result.get_si();
}

std::vector<Subspace> lcs_filtration(const GradedLieAlgebra& alg) {
  std::vector<Subspace> gammas;
  int total = alg.total_dim();
  for (int n = 1; n <= alg.class_bound() + 1; ++n) {
    std::vector<Vec> vecs;
    for (int i = 0; i < total; ++i) {
      if (alg.element(i).degree < n) continue;
      Vec v(total);
      v[i] = Rational(1);
      vecs.push_back(std::move(v));
    }
    gammas.push_back(Subspace::span(total, vecs));
  }
  return gammas;
}

Vec embed_degree(const GradedLieAlgebra& alg, int degree, const Vec& coords) {
  if (static_cast<int>(coords.size()) != alg.degree_dim(degree))
    throw std::invalid_argument("embed_degree: size mismatch");
  Vec v(alg.total_dim());
  int off = alg.degree_offset(degree);
  for (std::size_t i = 0; i < coords.size(); ++i) v[off + static_cast<int>(i)] = coords[i];
  return v;
}

LieCheckReport verify_graded_lie(const GradedLieAlgebra& alg) {
  LieCheckReport report;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    if (report.failures.size() < 20) report.failures.push_back(msg);
  };

  int total = alg.total_dim();
  // grading and weight additivity of the structure constants
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      int dsum = alg.element(a).degree + alg.element(b).degree;
      if (dsum > alg.class_bound()) continue;
      for (const auto& [i, c] : alg.basis_bracket(a, b)) {
        if (alg.element(i).degree != dsum)
          fail("bracket of " + alg.element(a).name + "," + alg.element(b).name +
               " leaves the expected degree");
        if (alg.element(i).weight != alg.element(a).weight + alg.element(b).weight)
          fail("bracket of " + alg.element(a).name + "," + alg.element(b).name +
               " is not weight-additive");
      }
    }
  }

  // Jacobi on all triples within the class bound
  auto sv_bracket_with_basis = [&](const SparseVec& xs, int c) {
    SparseVec acc;
    for (const auto& [i, ci] : xs) sv_add(acc, alg.basis_bracket(i, c), ci);
    return acc;
  };
  for (int a = 0; a < total; ++a) {
    for (int b = a; b < total; ++b) {
      int dab = alg.element(a).degree + alg.element(b).degree;
      if (dab >= alg.class_bound() + 1) break;
      for (int c = b; c < total; ++c) {
        if (dab + alg.element(c).degree > alg.class_bound()) break;
        SparseVec j;
        sv_add(j, sv_bracket_with_basis(alg.basis_bracket(a, b), c), Rational(1));
        sv_add(j, sv_bracket_with_basis(alg.basis_bracket(b, c), a), Rational(1));
        sv_add(j, sv_bracket_with_basis(alg.basis_bracket(c, a), b), Rational(1));
        if (!j.empty())
          fail("Jacobi fails on (" + alg.element(a).name + ", " + alg.element(b).name + ", " +
               alg.element(c).name + ")");
      }
    }
  }
  return report;
}

}  // namespace malcev
