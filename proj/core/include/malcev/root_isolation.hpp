#pragma once

#include <complex>
#include <vector>

#include "malcev/polynomial.hpp"

namespace malcev {

/// Enclosure of one polynomial root.  The discs returned by isolate_roots
/// jointly contain all roots (Weierstrass a-posteriori bound); when they are
/// pairwise disjoint, each disc contains exactly one root.
struct RootDisc {
  std::complex<double> center;
  double radius = 0.0;
};

/// All complex roots of a squarefree polynomial by Durand-Kerner iteration,
/// each with a certified radius.  The radius folds in a slack factor for
/// double-precision evaluation error; downstream classifiers must refuse
/// rather than guess whenever the discs are too coarse to decide.
/// Throws std::invalid_argument on zero, constant, or non-squarefree input.
std::vector<RootDisc> isolate_roots(const Polynomial& p);

}  // namespace malcev
