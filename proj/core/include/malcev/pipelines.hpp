#pragma once

#include <string>

#include "malcev/documents.hpp"

namespace malcev {

struct PipelineOptions {
  int class_bound = 5;         // nilpotency bound for presentations and bch
  int top_level = 4;           // cosimplicial truncation level
  long long q = 0;             // 0 means: take q from the document
  double tol = 1e-6;           // weight classification tolerance
  bool weight_graded = false;  // include the per-weight dimension table
};

/// A machine report plus its human rendering.  json_text is byte-identical
/// across runs for identical inputs and options; table is derived from it.
struct Report {
  std::string json_text;
  std::string table;
};

/// Quadratic presentation pipeline: validate the datum, emit the relations
/// dual to the cup pairing, close the graded ideal, quotient, and re-verify
/// the Lie axioms and the degreewise surjection.
Report run_present(const std::string& document_text, const PipelineOptions& opt);

/// Weight pipeline: classify the characteristic polynomial factors of the
/// Frobenius matrix, decompose by weight, and, when the document carries
/// generator weights, extend to the free algebra and report bracket
/// additivity plus splitting/purity against the K-generated filtration.
Report run_weights(const std::string& document_text, const PipelineOptions& opt);

/// Cover pipeline: assemble the cosimplicial algebra of the cover, verify
/// the identities, and report cohomology and low-degree cup products.
Report run_cech(const std::string& document_text, const PipelineOptions& opt);

/// Campbell-Hausdorff product of two degree-1 elements of the free
/// nilpotent algebra.  Specs are linear combinations like "x - 2/3*y"; the
/// generator set is the union of the names mentioned, or the explicit
/// comma-separated list when given (then unknown names are rejected).
Report run_bch(const std::string& x_spec, const std::string& y_spec,
               const std::string& generator_csv, const PipelineOptions& opt);

}  // namespace malcev
