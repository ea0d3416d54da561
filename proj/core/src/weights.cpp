#include "malcev/weights.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "malcev/bch.hpp"
#include "malcev/root_isolation.hpp"

namespace malcev {

namespace {

void check_tolerance(const WeilOptions& opt) {
  if (opt.q < 2) throw std::invalid_argument("weil: q must be a prime power >= 2");
  if (!(opt.tol > 0.0) || opt.tol >= 1.0)
    throw std::invalid_argument("weil: tolerance must lie in (0, 1)");
  // Adjacent candidate norms differ by a factor sqrt(q); the acceptance bands
  // scale the candidate by (1 +- tol) and must not touch.
  if ((1.0 + opt.tol) / (1.0 - opt.tol) >= std::sqrt(static_cast<double>(opt.q)))
    throw std::invalid_argument(
        "weil: tolerance too coarse to separate adjacent weights for q = " +
        std::to_string(opt.q));
}

struct NormInterval {
  double lo = 0.0, hi = 0.0;
};

NormInterval norm_interval(const RootDisc& d, double scale) {
  double mid = std::abs(d.center);
  return {std::max(0.0, mid - d.radius) / scale, (mid + d.radius) / scale};
}

// The unique candidate weight whose band certifiably contains the interval,
// if any.  Bands never overlap once check_tolerance passed.
std::optional<int> certified_weight(const NormInterval& iv, const WeilOptions& opt) {
  if (iv.lo <= 0.0) return std::nullopt;
  double mid = std::sqrt(iv.lo * iv.hi);
  double w_est = 2.0 * std::log(mid) / std::log(static_cast<double>(opt.q));
  for (int w = static_cast<int>(std::floor(w_est)) - 1;
       w <= static_cast<int>(std::ceil(w_est)) + 1; ++w) {
    if (std::abs(w) > opt.max_abs_weight) continue;
    double target = std::pow(static_cast<double>(opt.q), w / 2.0);
    if (iv.lo >= target / (1.0 + opt.tol) && iv.hi <= target * (1.0 + opt.tol))
      return w;
  }
  return std::nullopt;
}

// Complex disc arithmetic for the coefficients of a product of monic linear
// factors; radii absorb a few ulps of slack per operation.
struct CoeffDisc {
  std::complex<double> c;
  double r = 0.0;
};

CoeffDisc disc_mul(const CoeffDisc& a, const CoeffDisc& b) {
  std::complex<double> c = a.c * b.c;
  double r = std::abs(a.c) * b.r + std::abs(b.c) * a.r + a.r * b.r;
  return {c, r + 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(c) + r)};
}

CoeffDisc disc_add(const CoeffDisc& a, const CoeffDisc& b) {
  std::complex<double> c = a.c + b.c;
  double r = a.r + b.r;
  return {c, r + 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(c) + r)};
}

// Expands prod (S - root_i) with disc coefficients, low degree first.
std::vector<CoeffDisc> disc_product(const std::vector<RootDisc>& roots) {
  std::vector<CoeffDisc> poly = {{{1.0, 0.0}, 0.0}};
  for (const RootDisc& rt : roots) {
    std::vector<CoeffDisc> next(poly.size() + 1, CoeffDisc{{0.0, 0.0}, 0.0});
    CoeffDisc neg{-rt.center, rt.radius};
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = disc_add(next[k + 1], poly[k]);
      next[k] = disc_add(next[k], disc_mul(poly[k], neg));
    }
    poly = std::move(next);
  }
  return poly;
}

// Scale a monic rational polynomial to a monic integer one: with c the lcm
// of the coefficient denominators, g(S) = c^n p(S/c) has integer
// coefficients and roots c * (roots of p).
struct IntegerScaled {
  Polynomial g;
  mpz_class c;
};

// smallest s found with t | s^e, searched upward from the integer e-th root of
// t; past the search budget falls back to s = t, which always divides.  Keeping
// s small matters: the scaled roots grow like s, and oversized scales push the
// reconstructed class-product coefficients beyond what the root enclosures can
// round.
mpz_class root_multiple(const mpz_class& t, int e) {
  if (e <= 1 || t == 1) return t;
  mpz_class s;
  mpz_root(s.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(e));
  if (s < 1) s = 1;
  for (int tries = 0; tries < 100000; ++tries, ++s) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(e));
    if (pw % t == 0) return s;
  }
  return t;
}

IntegerScaled scale_to_integer(const Polynomial& p_monic) {
  const int n = p_monic.degree();
  mpz_class c(1);
  for (int k = n - 1; k >= 0; --k) {
    int e = n - k;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class v = p_monic.coeff(k).raw() * mpq_class(power);
    if (v.get_den() != 1) c *= root_multiple(v.get_den(), e);
  }
  std::vector<Rational> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k));
    coeffs[k] = Rational(mpq_class(p_monic.coeff(k).raw() * mpq_class(power)));
  }
  return {Polynomial(std::move(coeffs)), c};
}

// Splits one squarefree monic factor into rational subfactors, one per
// certified weight class of its roots.  The subfactors are recovered exactly:
// the class products of the integer-scaled polynomial are reconstructed from
// certified coefficient discs of radius < 1/2, rounded to the unique integer
// candidates, and the factorization is then verified by exact
// multiplication.  A verification failure proves some irreducible factor
// mixes norms.
std::map<int, Polynomial> split_squarefree(const Polynomial& sq, const WeilOptions& opt) {
  Polynomial p = sq.monic();
  IntegerScaled scaled = scale_to_integer(p);
  double c = scaled.c.get_d();

  std::vector<RootDisc> discs = isolate_roots(scaled.g);
  std::map<int, std::vector<RootDisc>> groups;
  for (const RootDisc& d : discs) {
    std::optional<int> w = certified_weight(norm_interval(d, c), opt);
    if (!w)
      throw InconclusiveClassification(
          "cannot certify a root norm of factor " + p.str() + " against half-integer powers of " +
          std::to_string(opt.q) + " at tolerance " + std::to_string(opt.tol));
    groups[*w].push_back(d);
  }
  if (groups.size() == 1) return {{groups.begin()->first, p}};

  std::map<int, Polynomial> out;
  Polynomial product(Rational(1));
  for (const auto& [w, roots] : groups) {
    std::vector<CoeffDisc> cds = disc_product(roots);
    std::vector<Rational> coeffs;
    for (const CoeffDisc& cd : cds) {
      if (cd.r >= 0.499)
        throw InconclusiveClassification(
            "coefficient enclosures of the weight-" + std::to_string(w) +
            " class of factor " + p.str() + " are too coarse to round");
      double re = cd.c.real();
      long long t = std::llround(re);
      if (std::abs(re - static_cast<double>(t)) > cd.r || std::abs(cd.c.imag()) > cd.r + 1e-9)
        throw NotPureFactor("factor " + p.str() +
                            " has no rational weight-class splitting: an irreducible factor "
                            "mixes root norms");
      coeffs.push_back(Rational(t));
    }
    Polynomial integer_class(std::move(coeffs));
    // back to the original variable: roots were scaled by c
    Polynomial h = integer_class.scale_variable(Rational(mpq_class(scaled.c))).monic();
    out.emplace(w, h);
    product = product * h;
  }
  if (!(product == p))
    throw NotPureFactor("factor " + p.str() +
                        " has no rational weight-class splitting: an irreducible factor mixes "
                        "root norms");
  return out;
}

}  // namespace

std::vector<ClassifiedFactor> weil_classify(
    const std::vector<std::pair<Polynomial, int>>& factors, const WeilOptions& opt) {
  check_tolerance(opt);
  std::vector<ClassifiedFactor> out;
  for (const auto& [f, mult] : factors) {
    if (f.degree() < 1)
      throw std::invalid_argument("weil_classify: factors must have degree >= 1");
    std::vector<RootDisc> discs = isolate_roots(f);
    std::vector<NormInterval> ivs;
    for (const RootDisc& d : discs) ivs.push_back(norm_interval(d, 1.0));

    std::optional<int> common;
    bool all_match = true;
    for (const NormInterval& iv : ivs) {
      std::optional<int> w = certified_weight(iv, opt);
      if (!w || (common && *common != *w)) {
        all_match = false;
        break;
      }
      common = w;
    }
    if (all_match && common) {
      out.push_back({f, mult, common});
      continue;
    }
    bool differing = false;
    for (std::size_t i = 0; i < ivs.size() && !differing; ++i)
      for (std::size_t j = 0; j < ivs.size() && !differing; ++j)
        if (ivs[i].hi < ivs[j].lo) differing = true;
    if (differing) {
      out.push_back({f, mult, std::nullopt});
      continue;
    }
    throw InconclusiveClassification("factor " + f.str() +
                                     " cannot be classified at tolerance " +
                                     std::to_string(opt.tol) + " for q = " +
                                     std::to_string(opt.q));
  }
  return out;
}

int WeightDecomposition::total_dim() const {
  int t = 0;
  for (const auto& [w, s] : pieces) t += s.dim();
  return t;
}

WeightDecomposition frobenius_weight_decomposition(const Matrix& F, const WeilOptions& opt) {
  check_tolerance(opt);
  if (F.rows() != F.cols())
    throw std::invalid_argument("frobenius_weight_decomposition: matrix must be square");
  WeightDecomposition out;
  out.ambient_dim = F.rows();
  if (F.rows() == 0) return out;

  Polynomial chi = char_poly(F);
  if (chi.coeff(0).is_zero())
    throw std::invalid_argument("frobenius_weight_decomposition: matrix is not invertible");

  // weight -> per squarefree level (class polynomial, multiplicity)
  std::map<int, std::vector<std::pair<Polynomial, int>>> classes;
  for (const auto& [sq, mult] : squarefree_factors(chi)) {
    if (sq.degree() < 1) continue;
    for (const auto& [w, h] : split_squarefree(sq, opt)) classes[w].push_back({h, mult});
  }

  for (const auto& [w, parts] : classes) {
    Matrix m = Matrix::identity(F.rows());
    for (const auto& [h, mult] : parts) m = m * h.eval(F).pow(mult);
    Subspace piece = kernel(m);
    out.pieces.emplace(w, std::move(piece));
  }

  Subspace running = Subspace::zero(F.rows());
  for (const auto& [w, piece] : out.pieces) {
    if (intersect(running, piece).dim() != 0)
      throw std::logic_error("frobenius_weight_decomposition: pieces are not independent");
    running = sum(running, piece);
    if (!(piece.apply(F) == piece))
      throw std::logic_error("frobenius_weight_decomposition: piece is not F-stable");
  }
  if (running.dim() != F.rows())
    throw std::logic_error("frobenius_weight_decomposition: pieces do not span");
  return out;
}

std::vector<Matrix> extend_frobenius(const AlgebraPtr& alg, const Matrix& degree1) {
  const GradedLieAlgebra& L = *alg;
  if (degree1.rows() != L.degree_dim(1) || degree1.cols() != L.degree_dim(1))
    throw std::invalid_argument("extend_frobenius: degree-1 matrix has the wrong shape");
  std::vector<Matrix> mats;
  mats.push_back(degree1);
  for (int d = 2; d <= L.class_bound(); ++d) {
    Matrix m(L.degree_dim(d), L.degree_dim(d));
    for (int col = 0; col < L.degree_dim(d); ++col) {
      int gi = L.degree_offset(d) + col;
      const BasisElement& e = L.element(gi);
      int ld, rd;
      Vec lv, rv;
      if (e.left >= 0) {
        ld = L.element(e.left).degree;
        rd = L.element(e.right).degree;
        lv.assign(L.degree_dim(ld), Rational(0));
        lv[e.left - L.degree_offset(ld)] = Rational(1);
        rv.assign(L.degree_dim(rd), Rational(0));
        rv[e.right - L.degree_offset(rd)] = Rational(1);
      } else {
        const auto& wit = L.witness(gi);
        if (!wit)
          throw std::invalid_argument("extend_frobenius: basis element " + e.name +
                                      " has no bracket witness");
        ld = wit->left_degree;
        rd = wit->right_degree;
        lv = wit->left;
        rv = wit->right;
      }
      LieElement fl = L.from_degree_coords(ld, mats[ld - 1].apply(lv));
      LieElement fr = L.from_degree_coords(rd, mats[rd - 1].apply(rv));
      Vec img = bracket(fl, fr).degree_coords(d);
      for (int row = 0; row < L.degree_dim(d); ++row)
        if (!img[row].is_zero()) m.set(row, col, img[row]);
    }
    mats.push_back(std::move(m));
  }
  try {
    LieHom check(alg, alg, mats);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(
        std::string("extend_frobenius: the degree-1 map does not extend to a bracket-"
                    "compatible action: ") +
        e.what());
  }
  return mats;
}

std::vector<WeightDecomposition> algebra_weight_decomposition(const AlgebraPtr& alg,
                                                              const FrobeniusAction& F,
                                                              const WeilOptions& opt) {
  if (static_cast<int>(F.matrices.size()) != alg->class_bound())
    throw std::invalid_argument("algebra_weight_decomposition: need one matrix per degree");
  std::vector<WeightDecomposition> out;
  for (int d = 1; d <= alg->class_bound(); ++d) {
    const Matrix& m = F.matrices[d - 1];
    if (m.rows() != alg->degree_dim(d) || m.cols() != alg->degree_dim(d))
      throw std::invalid_argument("algebra_weight_decomposition: matrix shape mismatch in degree " +
                                  std::to_string(d));
    out.push_back(frobenius_weight_decomposition(m, opt));
  }
  return out;
}

LieCheckReport check_bracket_additivity(const AlgebraPtr& alg, const FrobeniusAction& F,
                                        const std::vector<WeightDecomposition>& decomp) {
  LieCheckReport rep;
  auto fail = [&](std::string m) {
    rep.pass = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(m));
  };
  const GradedLieAlgebra& L = *alg;
  try {
    LieHom check(alg, alg, F.matrices);
  } catch (const std::invalid_argument& e) {
    fail(std::string("action is not bracket-compatible: ") + e.what());
  }
  if (static_cast<int>(decomp.size()) != L.class_bound()) {
    fail("decomposition does not cover every degree");
    return rep;
  }
  for (int d1 = 1; d1 <= L.class_bound(); ++d1)
    for (int d2 = d1; d1 + d2 <= L.class_bound(); ++d2)
      for (const auto& [w1, p1] : decomp[d1 - 1].pieces)
        for (const auto& [w2, p2] : decomp[d2 - 1].pieces) {
          if (d1 == d2 && w2 < w1) continue;
          const auto& target_map = decomp[d1 + d2 - 1].pieces;
          auto target = target_map.find(w1 + w2);
          for (const Vec& u : p1.basis())
            for (const Vec& v : p2.basis()) {
              LieElement br = bracket(L.from_degree_coords(d1, u),
                                      L.from_degree_coords(d2, v));
              if (br.is_zero()) continue;
              Vec coords = br.degree_coords(d1 + d2);
              if (target == target_map.end() || !target->second.contains(coords))
                fail("bracket of weights (" + std::to_string(w1) + ", " + std::to_string(w2) +
                     ") in degrees (" + std::to_string(d1) + ", " + std::to_string(d2) +
                     ") escapes weight " + std::to_string(w1 + w2));
            }
        }
  return rep;
}

const Subspace& WeightFiltration::at(int n) const {
  if (levels.empty()) throw std::logic_error("WeightFiltration::at: empty filtration");
  if (n >= -1) return levels.at(-1);
  auto it = levels.lower_bound(n);  // smallest stored level >= n
  if (it == levels.end()) return levels.rbegin()->second;
  if (it->first == n) return it->second;
  return levels.begin()->second;  // below the stored range: the zero level
}

int WeightFiltration::lowest() const {
  if (levels.empty()) throw std::logic_error("WeightFiltration::lowest: empty filtration");
  return levels.begin()->first;
}

WeightFiltration weight_filtration(const AlgebraPtr& alg, const Subspace& k_generators) {
  const GradedLieAlgebra& L = *alg;
  if (k_generators.ambient_dim() != L.degree_dim(1))
    throw std::invalid_argument("weight_filtration: generators must live in degree 1");
  const int N = L.class_bound();

  // T[d][k]: span of degree-d brackets with at least k arguments from the
  // chosen generators; weight of such a bracket is at most -d-k.
  std::vector<std::vector<Subspace>> T(N + 1);
  T[1] = {Subspace::full(L.degree_dim(1)), k_generators};
  for (int d = 2; d <= N; ++d) {
    T[d].reserve(d + 1);
    for (int k = 0; k <= d; ++k) {
      std::vector<Vec> spanning;
      for (int e = 1; e < d; ++e) {
        int f = d - e;
        // a runs so that both factors can still carry their share of
        // generator arguments: a <= e, b = k - a <= f
        for (int a = std::max(0, k - f); a <= std::min(k, e); ++a) {
          int b = k - a;
          const Subspace& A = T[e][a];
          const Subspace& B = T[f][b];
          for (const Vec& u : A.basis())
            for (const Vec& v : B.basis()) {
              LieElement br = bracket(L.from_degree_coords(e, u), L.from_degree_coords(f, v));
              if (!br.is_zero()) spanning.push_back(br.degree_coords(d));
            }
        }
      }
      T[d].push_back(Subspace::span(L.degree_dim(d), spanning));
    }
  }

  WeightFiltration out;
  out.ambient_dim = L.total_dim();
  for (int n = -1; n >= -2 * N - 1; --n) {
    std::vector<Vec> spanning;
    for (int d = 1; d <= N; ++d) {
      int k = std::max(0, -n - d);
      if (k > d) continue;  // a degree-d bracket holds at most d generators
      for (const Vec& u : T[d][k].basis()) spanning.push_back(embed_degree(L, d, u));
    }
    out.levels.emplace(n, Subspace::span(L.total_dim(), spanning));
  }
  return out;
}

namespace {

// Per-weight decomposition pieces embedded into the total space.
std::map<int, Subspace> total_pieces(const GradedLieAlgebra& L,
                                     const std::vector<WeightDecomposition>& decomp) {
  std::map<int, std::vector<Vec>> spans;
  for (int d = 1; d <= static_cast<int>(decomp.size()); ++d)
    for (const auto& [w, piece] : decomp[d - 1].pieces)
      for (const Vec& u : piece.basis()) spans[w].push_back(embed_degree(L, d, u));
  std::map<int, Subspace> out;
  for (auto& [w, vecs] : spans) out.emplace(w, Subspace::span(L.total_dim(), vecs));
  return out;
}

bool shapes_ok(const GradedLieAlgebra& L, const std::vector<WeightDecomposition>& decomp,
               const WeightFiltration& filt, LieCheckReport& rep) {
  auto fail = [&](std::string m) {
    rep.pass = false;
    rep.failures.push_back(std::move(m));
  };
  if (static_cast<int>(decomp.size()) != L.class_bound()) {
    fail("decomposition does not cover every degree");
    return false;
  }
  for (int d = 1; d <= L.class_bound(); ++d)
    if (decomp[d - 1].ambient_dim != L.degree_dim(d)) {
      fail("decomposition ambient mismatch in degree " + std::to_string(d));
      return false;
    }
  if (filt.ambient_dim != L.total_dim() || filt.levels.empty()) {
    fail("filtration does not live on the total space");
    return false;
  }
  return true;
}

}  // namespace

LieCheckReport check_splitting(const AlgebraPtr& alg,
                               const std::vector<WeightDecomposition>& decomp,
                               const WeightFiltration& filt) {
  LieCheckReport rep;
  if (!shapes_ok(*alg, decomp, filt, rep)) return rep;
  std::map<int, Subspace> pieces = total_pieces(*alg, decomp);
  int lo = filt.lowest();
  if (!pieces.empty()) lo = std::min(lo, pieces.begin()->first - 1);
  Subspace partial = Subspace::zero(alg->total_dim());
  auto it = pieces.begin();
  for (int n = lo; n <= -1; ++n) {
    while (it != pieces.end() && it->first <= n) {
      partial = sum(partial, it->second);
      ++it;
    }
    if (!(partial == filt.at(n))) {
      rep.pass = false;
      rep.failures.push_back("splitting fails at weight " + std::to_string(n) +
                             ": direct sum of pieces <= " + std::to_string(n) +
                             " has dimension " + std::to_string(partial.dim()) +
                             ", filtration level has " + std::to_string(filt.at(n).dim()));
      if (rep.failures.size() >= 20) return rep;
    }
  }
  return rep;
}

LieCheckReport purity_report(const AlgebraPtr& alg,
                             const std::vector<WeightDecomposition>& decomp,
                             const WeightFiltration& filt) {
  LieCheckReport rep;
  if (!shapes_ok(*alg, decomp, filt, rep)) return rep;
  auto fail = [&](std::string m) {
    rep.pass = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(m));
  };
  std::map<int, Subspace> pieces = total_pieces(*alg, decomp);
  int lo = filt.lowest();
  if (!pieces.empty()) lo = std::min(lo, pieces.begin()->first);
  for (int n = lo; n <= -1; ++n) {
    int graded = filt.at(n).dim() - filt.at(n - 1).dim();
    auto it = pieces.find(n);
    int piece_dim = it == pieces.end() ? 0 : it->second.dim();
    if (piece_dim != graded)
      fail("graded piece at weight " + std::to_string(n) + " has dimension " +
           std::to_string(graded) + " but the decomposition carries " +
           std::to_string(piece_dim));
    if (it != pieces.end()) {
      if (!filt.at(n).contains(it->second))
        fail("weight-" + std::to_string(n) + " piece is not inside filtration level " +
             std::to_string(n));
      if (intersect(it->second, filt.at(n - 1)).dim() != 0)
        fail("weight-" + std::to_string(n) + " piece meets filtration level " +
             std::to_string(n - 1));
    }
  }
  return rep;
}

}  // namespace malcev
