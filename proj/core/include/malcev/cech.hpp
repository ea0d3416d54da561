#pragma once

#include <vector>

#include "malcev/cosimplicial.hpp"

namespace malcev {

struct CechPatch {
  std::vector<int> opens;  // strictly increasing open indices
  int dim = 0;             // components of the intersection; 0 marks it empty
};

struct CechRestriction {
  std::vector<int> from;  // patch with one fewer open
  std::vector<int> to;
  Matrix map;  // dim(to) x dim(from), a component-refinement map
};

/// Coefficient data on the nerve of a finite cover: one componentwise
/// algebra per nonempty finite intersection, with restriction maps along
/// single-open refinements.  Patches missing from the list are empty
/// intersections.
struct CechInput {
  int open_count = 0;
  std::vector<CechPatch> patches;
  std::vector<CechRestriction> restrictions;
};

/// Cech cosimplicial algebra of the cover: level n is the product over all
/// ordered (n+1)-tuples of opens of the coefficients on the tuple's
/// intersection; cofaces delete a tuple position and restrict, codegeneracies
/// repeat one.  Restriction composites are checked for path independence;
/// inconsistent or non-functorial data raises std::invalid_argument.
CosimplicialAlgebra cech_build(const CechInput& input, int top_level);

/// Homogeneous cochain model of a finite group of the given order with
/// rational coefficients: functions on (n+1)-tuples of group elements, with
/// cofaces dual to position deletion.  This is the Cech object of the
/// group-sized cover of a point, so its cohomology is the coefficients in
/// degree 0 and zero above.
CosimplicialAlgebra bar_complex(int group_order, int top_level);

}  // namespace malcev
