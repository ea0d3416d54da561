#include "malcev/presentation.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace malcev {

void CohomologyDatum::validate() const {
  if (h1_dim < 0 || h2_dim < 0)
    throw std::invalid_argument("cohomology datum: negative dimension");
  if (static_cast<int>(h1_weights.size()) != h1_dim)
    throw std::invalid_argument("cohomology datum: h1_weights length != h1_dim");
  if (static_cast<int>(h2_weights.size()) != h2_dim)
    throw std::invalid_argument("cohomology datum: h2_weights length != h2_dim");
  for (int w : h1_weights)
    if (w < 1) throw std::invalid_argument("cohomology datum: h1 weights must be positive");
  for (int w : h2_weights)
    if (w < 1) throw std::invalid_argument("cohomology datum: h2 weights must be positive");
  if (q && *q < 2) throw std::invalid_argument("cohomology datum: q must be >= 2");
  if (static_cast<int>(cup.size()) != h2_dim)
    throw std::invalid_argument("cohomology datum: cup table needs one matrix per h2 vector");
  for (int k = 0; k < h2_dim; ++k) {
    const Matrix& m = cup[k];
    if (m.rows() != h1_dim || m.cols() != h1_dim)
      throw std::invalid_argument("cohomology datum: cup matrix " + std::to_string(k) +
                                  " is not h1_dim x h1_dim");
    for (int i = 0; i < h1_dim; ++i)
      for (const auto& [j, c] : m.row(i)) {
        if (!(m.at(j, i) == -c))
          throw std::invalid_argument(
              "cohomology datum: cup matrix " + std::to_string(k) +
              " is not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (h2_weights[k] != h1_weights[i] + h1_weights[j])
          throw std::invalid_argument(
              "cohomology datum: cup matrix " + std::to_string(k) + " entry (" +
              std::to_string(i) + "," + std::to_string(j) + ") violates weight additivity");
      }
  }
}

CohomologyDatum OpenVarietyDatum::to_cohomology() const {
  if (h1_compact_dim < 0 || boundary_dim < 0 || h2_dim < 0)
    throw std::invalid_argument("open variety datum: negative dimension");
  CohomologyDatum d;
  d.q = q;
  d.h1_dim = h1_compact_dim + boundary_dim;
  d.h1_weights.assign(h1_compact_dim, 1);
  d.h1_weights.insert(d.h1_weights.end(), boundary_dim, 2);
  d.h2_dim = h2_dim;
  d.cup = cup;
  for (int k = 0; k < h2_dim; ++k) {
    int w = 2;
    if (k < static_cast<int>(cup.size()) && cup[k].rows() == d.h1_dim &&
        cup[k].cols() == d.h1_dim) {
      bool found = false;
      for (int i = 0; i < d.h1_dim && !found; ++i)
        for (const auto& [j, c] : cup[k].row(i)) {
          w = d.h1_weights[i] + d.h1_weights[j];
          found = true;
          break;
        }
    }
    d.h2_weights.push_back(w);
  }
  d.validate();
  return d;
}

std::vector<LieElement> dual_cup_relations(const AlgebraPtr& free_algebra,
                                           const CohomologyDatum& d) {
  d.validate();
  if (!free_algebra->is_free() || free_algebra->generator_count() != d.h1_dim)
    throw std::invalid_argument("dual_cup_relations: algebra does not match the datum");
  std::vector<LieElement> out;
  for (int k = 0; k < d.h2_dim; ++k) {
    LieElement r = free_algebra->zero();
    for (int i = 0; i < d.h1_dim; ++i)
      for (const auto& [j, c] : d.cup[k].row(i))
        if (i < j)
          r += bracket(free_algebra->basis_element(i), free_algebra->basis_element(j)).scaled(c);
    out.push_back(r);
  }
  return out;
}

std::vector<Subspace> ideal_closure(const AlgebraPtr& free_algebra,
                                    const std::vector<LieElement>& relations) {
  const GradedLieAlgebra& L = *free_algebra;
  const int N = L.class_bound();
  std::vector<std::vector<Vec>> by_degree(N + 1);
  for (const auto& r : relations) {
    if (r.algebra().get() != free_algebra.get())
      throw std::invalid_argument("ideal_closure: relation from a different algebra");
    if (r.is_zero()) continue;
    int deg = 0;
    if (!r.homogeneous_degree(&deg))
      throw std::invalid_argument("ideal_closure: inhomogeneous relation " + r.str());
    if (deg < 2) throw std::invalid_argument("ideal_closure: relation of degree < 2");
    by_degree[deg].push_back(r.degree_coords(deg));
  }
  std::vector<Subspace> ideal;
  ideal.push_back(Subspace::zero(L.degree_dim(1)));
  for (int d = 2; d <= N; ++d) {
    std::vector<Vec> spanning = by_degree[d];
    for (int g = 0; g < L.generator_count(); ++g)
      for (const Vec& u : ideal[d - 2].basis()) {
        LieElement bu = bracket(L.basis_element(g), L.from_degree_coords(d - 1, u));
        if (!bu.is_zero()) spanning.push_back(bu.degree_coords(d));
      }
    ideal.push_back(Subspace::span(L.degree_dim(d), spanning));
  }
  return ideal;
}

QuotientResult quotient_algebra(const AlgebraPtr& free_algebra,
                                const std::vector<Subspace>& ideal) {
  const GradedLieAlgebra& L = *free_algebra;
  const int N = L.class_bound();
  if (static_cast<int>(ideal.size()) != N)
    throw std::invalid_argument("quotient_algebra: need one subspace per degree 1..N");
  for (int d = 1; d <= N; ++d)
    if (ideal[d - 1].ambient_dim() != L.degree_dim(d))
      throw std::invalid_argument("quotient_algebra: ambient mismatch in degree " +
                                  std::to_string(d));
  if (ideal[0].dim() != 0)
    throw std::invalid_argument("quotient_algebra: ideal must vanish in degree 1");
  for (int d = 2; d <= N; ++d)
    for (const Vec& u : ideal[d - 1].basis()) {
      LieElement ue = L.from_degree_coords(d, u);
      for (int b = 0; b < L.total_dim(); ++b) {
        int e = L.element(b).degree;
        if (d + e > N) break;  // basis is sorted by degree
        LieElement bu = bracket(L.basis_element(b), ue);
        if (bu.is_zero()) continue;
        if (!ideal[d + e - 1].contains(bu.degree_coords(d + e)))
          throw std::invalid_argument("quotient_algebra: not an ideal: [" + L.element(b).name +
                                      ", J_" + std::to_string(d) + "] escapes the ideal");
      }
    }

  // Kept (non-pivot) columns become the quotient basis; the projection sends
  // a vector to the kept coordinates of its canonical representative.
  std::vector<std::vector<int>> kept(N + 1);
  std::vector<Matrix> proj(N);
  std::vector<int> q_offset(N + 2, 0);
  for (int d = 1; d <= N; ++d) {
    const Subspace& J = ideal[d - 1];
    std::vector<bool> is_pivot(L.degree_dim(d), false);
    for (int p : J.pivot_cols()) is_pivot[p] = true;
    for (int c = 0; c < L.degree_dim(d); ++c)
      if (!is_pivot[c]) kept[d].push_back(c);
    Matrix m(static_cast<int>(kept[d].size()), L.degree_dim(d));
    for (int c = 0; c < L.degree_dim(d); ++c) {
      Vec unit(L.degree_dim(d));
      unit[c] = Rational(1);
      Vec w = J.reduce(unit);
      for (int r = 0; r < static_cast<int>(kept[d].size()); ++r)
        if (!w[kept[d][r]].is_zero()) m.set(r, c, w[kept[d][r]]);
    }
    proj[d - 1] = std::move(m);
    q_offset[d + 1] = q_offset[d] + static_cast<int>(kept[d].size());
  }

  auto project_degree = [&](int d, const Vec& v) {
    Vec w = ideal[d - 1].reduce(v);
    Vec out(kept[d].size());
    for (int r = 0; r < static_cast<int>(kept[d].size()); ++r) out[r] = w[kept[d][r]];
    return out;
  };

  std::vector<BasisElement> basis;
  std::vector<std::optional<GradedLieAlgebra::Witness>> witnesses;
  for (int d = 1; d <= N; ++d)
    for (int c : kept[d]) {
      const BasisElement& fe = L.element(L.degree_offset(d) + c);
      BasisElement qe;
      qe.degree = d;
      qe.weight = fe.weight;
      qe.name = fe.name;
      qe.generator = d == 1 ? fe.generator : -1;
      basis.push_back(qe);
      if (d == 1) {
        witnesses.push_back(std::nullopt);
      } else {
        GradedLieAlgebra::Witness wit;
        wit.left_degree = L.element(fe.left).degree;
        wit.right_degree = L.element(fe.right).degree;
        Vec lv(L.degree_dim(wit.left_degree));
        lv[fe.left - L.degree_offset(wit.left_degree)] = Rational(1);
        Vec rv(L.degree_dim(wit.right_degree));
        rv[fe.right - L.degree_offset(wit.right_degree)] = Rational(1);
        wit.left = project_degree(wit.left_degree, lv);
        wit.right = project_degree(wit.right_degree, rv);
        witnesses.push_back(wit);
      }
    }

  std::map<std::pair<int, int>, SparseVec> table;
  for (int da = 1; da <= N; ++da)
    for (int db = da; db <= N; ++db) {
      if (da + db > N) continue;
      for (int ia = 0; ia < static_cast<int>(kept[da].size()); ++ia)
        for (int ib = 0; ib < static_cast<int>(kept[db].size()); ++ib) {
          int qa = q_offset[da] + ia;
          int qb = q_offset[db] + ib;
          if (qa >= qb) continue;
          int fa = L.degree_offset(da) + kept[da][ia];
          int fb = L.degree_offset(db) + kept[db][ib];
          Vec dense(L.degree_dim(da + db));
          for (const auto& [i, c] : L.basis_bracket(fa, fb))
            dense[i - L.degree_offset(da + db)] = c;
          Vec qc = project_degree(da + db, dense);
          SparseVec sv;
          for (int r = 0; r < static_cast<int>(qc.size()); ++r)
            if (!qc[r].is_zero()) sv.emplace(q_offset[da + db] + r, qc[r]);
          if (!sv.empty()) table.emplace(std::make_pair(qa, qb), std::move(sv));
        }
    }

  AlgebraPtr quotient =
      GradedLieAlgebra::from_parts(std::move(basis), std::move(table), N, std::move(witnesses));
  LieCheckReport check = verify_graded_lie(*quotient);
  if (!check.pass)
    throw std::logic_error("quotient_algebra: quotient fails Lie axioms: " + check.failures[0]);
  LieHom projection(free_algebra, quotient, std::move(proj));
  return QuotientResult{std::move(quotient), std::move(projection)};
}

Presentation build_presentation(const CohomologyDatum& d, int class_bound) {
  d.validate();
  if (d.h1_dim < 1)
    throw std::invalid_argument("build_presentation: datum needs h1_dim >= 1");
  std::vector<Generator> gens;
  for (int i = 0; i < d.h1_dim; ++i)
    gens.push_back({"x" + std::to_string(i + 1), -d.h1_weights[i]});
  AlgebraPtr L = GradedLieAlgebra::free_nilpotent(gens, class_bound);
  std::vector<LieElement> kept;
  std::vector<int> dropped;
  {
    std::vector<LieElement> all = dual_cup_relations(L, d);
    for (int k = 0; k < static_cast<int>(all.size()); ++k) {
      if (all[k].is_zero())
        dropped.push_back(k);
      else
        kept.push_back(all[k]);
    }
  }
  std::vector<Subspace> ideal = ideal_closure(L, kept);
  QuotientResult qr = quotient_algebra(L, ideal);
  return Presentation{std::move(L),         std::move(kept),    std::move(dropped),
                      std::move(ideal),     std::move(qr.algebra), std::move(qr.projection)};
}

LieCheckReport tangent_surjection_check(const Presentation& p) {
  LieCheckReport rep;
  auto fail = [&](std::string m) {
    rep.pass = false;
    rep.failures.push_back(std::move(m));
  };
  for (int d = 1; d <= p.free_algebra->class_bound(); ++d) {
    const Matrix& m = p.projection.degree_matrix(d);
    if (rank(m) != p.quotient->degree_dim(d))
      fail("projection not surjective in degree " + std::to_string(d));
  }
  if (!(p.projection.degree_matrix(1) == Matrix::identity(p.free_algebra->degree_dim(1))))
    fail("projection is not the identity in degree 1");
  return rep;
}

}  // namespace malcev
