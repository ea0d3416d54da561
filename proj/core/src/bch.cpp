#include "malcev/bch.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace malcev {

namespace {

using Word = std::vector<std::uint8_t>;  // 0 = x, 1 = y

// Right-nested bracketing [w_0,[w_1,[...,w_m]]], memoized on word suffixes.
class NestedBrackets {
public:
  NestedBrackets(const LieElement& x, const LieElement& y) : x_(x), y_(y) {}

  const LieElement& eval(const Word& w) {
    auto hit = memo_.find(w);
    if (hit != memo_.end()) return hit->second;
    LieElement value = x_.algebra()->zero();
    if (w.size() == 1) {
      value = w[0] ? y_ : x_;
    } else {
      Word tail(w.begin() + 1, w.end());
      value = bracket(w[0] ? y_ : x_, eval(tail));
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

private:
  LieElement x_, y_;
  std::map<Word, LieElement> memo_;
};

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// Enumerates the block sequences (p_1,q_1),...,(p_n,q_n), p_i + q_i >= 1, of
// the Dynkin series up to total length `bound`, accumulating
//   (-1)^{n-1} / (n * total * prod p_i! q_i!)  *  [word brackets]
// into `acc`.
void enumerate(int bound, int blocks, int total, const Rational& denom_blocks, Word& word,
               NestedBrackets& nested, LieElement& acc) {
  if (total >= 1) {
    Rational coeff = Rational((blocks % 2) ? 1 : -1) /
                     (Rational(blocks) * Rational(total) * denom_blocks);
    acc += nested.eval(word).scaled(coeff);
  }
  if (total >= bound) return;
  for (int p = 0; total + p <= bound; ++p) {
    for (int q = (p == 0 ? 1 : 0); total + p + q <= bound; ++q) {
      std::size_t mark = word.size();
      word.insert(word.end(), p, std::uint8_t{0});
      word.insert(word.end(), q, std::uint8_t{1});
      Rational denom = denom_blocks * factorial(p) * factorial(q);
      enumerate(bound, blocks + 1, total + p + q, denom, word, nested, acc);
      word.resize(mark);
    }
  }
}

}  // namespace

LieElement bch(const LieElement& x, const LieElement& y) {
  if (x.algebra().get() != y.algebra().get())
    throw std::invalid_argument("bch: algebra mismatch");
  const int bound = x.algebra()->class_bound();
  NestedBrackets nested(x, y);
  LieElement acc = x.algebra()->zero();
  Word word;
  enumerate(bound, 0, 0, Rational(1), word, nested, acc);
  return acc;
}

LieElement group_inverse(const LieElement& x) { return -x; }

LieHom::LieHom(AlgebraPtr from, AlgebraPtr to, std::vector<Matrix> per_degree)
    : from_(std::move(from)), to_(std::move(to)), per_degree_(std::move(per_degree)) {
  if (!from_ || !to_) throw std::invalid_argument("LieHom: null algebra");
  if (static_cast<int>(per_degree_.size()) > from_->class_bound())
    throw std::invalid_argument("LieHom: too many degree maps");
  per_degree_.resize(from_->class_bound());
  for (int d = 1; d <= from_->class_bound(); ++d) {
    Matrix& m = per_degree_[d - 1];
    bool mapped = d <= to_->class_bound();
    if (m.rows() == 0 && m.cols() == 0) {
      m = Matrix(mapped ? to_->degree_dim(d) : 0, from_->degree_dim(d));
    }
    if (m.cols() != from_->degree_dim(d) ||
        m.rows() != (mapped ? to_->degree_dim(d) : 0))
      throw std::invalid_argument("LieHom: matrix shape mismatch in degree " +
                                  std::to_string(d));
  }
  // bracket compatibility on basis pairs
  for (int a = 0; a < from_->total_dim(); ++a) {
    for (int b = a + 1; b < from_->total_dim(); ++b) {
      int dsum = from_->element(a).degree + from_->element(b).degree;
      if (dsum > from_->class_bound()) continue;
      Vec v(from_->degree_dim(dsum));  // [e_a, e_b] lives purely in degree dsum
      for (const auto& [i, c] : from_->basis_bracket(a, b))
        v[i - from_->degree_offset(dsum)] = c;
      LieElement image_bracket = apply(from_->from_degree_coords(dsum, v));
      LieElement bracket_images = bracket(apply(from_->basis_element(a)),
                                          apply(from_->basis_element(b)));
      if (!(image_bracket == bracket_images))
        throw std::invalid_argument("LieHom: not a Lie homomorphism on basis pair (" +
                                    from_->element(a).name + ", " + from_->element(b).name +
                                    ")");
    }
  }
}

LieHom LieHom::identity(const AlgebraPtr& alg) {
  std::vector<Matrix> mats;
  for (int d = 1; d <= alg->class_bound(); ++d) mats.push_back(Matrix::identity(alg->degree_dim(d)));
  return LieHom(alg, alg, std::move(mats));
}

LieHom LieHom::zero(const AlgebraPtr& from, const AlgebraPtr& to) {
  std::vector<Matrix> mats;
  for (int d = 1; d <= from->class_bound(); ++d)
    mats.push_back(Matrix(d <= to->class_bound() ? to->degree_dim(d) : 0, from->degree_dim(d)));
  return LieHom(from, to, std::move(mats));
}

LieHom LieHom::abelianization(const AlgebraPtr& from) {
  std::vector<Generator> gens;
  for (int i = 0; i < from->generator_count(); ++i) {
    const auto& e = from->element(i);
    gens.push_back({e.name, e.weight});
  }
  AlgebraPtr target = GradedLieAlgebra::free_nilpotent(gens, 1);
  std::vector<Matrix> mats;
  mats.push_back(Matrix::identity(from->generator_count()));
  return LieHom(from, target, std::move(mats));
}

const Matrix& LieHom::degree_matrix(int degree) const {
  if (degree < 1 || degree > from_->class_bound())
    throw std::out_of_range("LieHom::degree_matrix: degree out of range");
  return per_degree_[degree - 1];
}

LieElement LieHom::apply(const LieElement& e) const {
  if (e.algebra().get() != from_.get()) throw std::invalid_argument("LieHom::apply: algebra mismatch");
  LieElement out = to_->zero();
  for (int d = 1; d <= from_->class_bound(); ++d) {
    if (d > to_->class_bound()) break;
    Vec coords = e.degree_coords(d);
    bool any = false;
    for (const auto& c : coords) any = any || !c.is_zero();
    if (!any) continue;
    out += to_->from_degree_coords(d, per_degree_[d - 1].apply(coords));
  }
  return out;
}

GroupElement push_forward(const LieHom& hom, const GroupElement& g) {
  return GroupElement(hom.apply(g.log()));
}

}  // namespace malcev
