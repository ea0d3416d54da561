#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "malcev/cech.hpp"
#include "malcev/matrix.hpp"
#include "malcev/presentation.hpp"

namespace malcev {

/// Structural problem with an input document: malformed JSON, a wrong or
/// missing "kind", bad types, unknown fields, or unparseable rationals.
/// The CLI maps this to exit code 2; mathematical invariant violations of a
/// well-formed document surface later as std::invalid_argument (exit 3).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DocumentKind { cohomology, open_variety, frobenius, cech };

/// Reads only the top-level "kind" field.
DocumentKind document_kind(const std::string& text);

struct ParsedCohomology {
  DocumentKind kind = DocumentKind::cohomology;
  CohomologyDatum datum;  // open_variety documents arrive already converted
};

/// Accepts kind "cohomology" (fields q, h1_dim, h1_weights, h2_dim,
/// h2_weights, cup) and kind "open_variety" (q, h1_compact_dim,
/// boundary_dim, h2_dim, cup).  Omitted weight lists default to weight 1 on
/// degree-1 vectors and weight 2 on degree-2 vectors; an omitted cup table
/// defaults to zero.  Rationals are JSON integers or strings "p/q".
ParsedCohomology parse_cohomology_document(const std::string& text);

/// kind "frobenius".  The matrix acts on a plain space, unless
/// generator_weights is present, in which case it is the degree-1 action on
/// the free nilpotent algebra on generators of those (negative) weights.
/// k_generators optionally spans the subspace K generating the weight
/// filtration, in degree-1 coordinates.
struct FrobeniusDocument {
  std::optional<long long> q;
  Matrix matrix{0, 0};
  std::optional<std::vector<int>> generator_weights;
  std::optional<std::vector<Vec>> k_generators;
};

FrobeniusDocument parse_frobenius_document(const std::string& text);

/// kind "cech": open_count, patches [{opens, dim}], restrictions
/// [{from, to, map}].
CechInput parse_cech_document(const std::string& text);

/// Renders a machine report as an aligned text table.  The table is a pure
/// function of the JSON text, so the two views cannot drift apart: scalars
/// become "key: value" lines, arrays of objects become aligned columns.
std::string render_report_table(const std::string& json_text);

}  // namespace malcev
