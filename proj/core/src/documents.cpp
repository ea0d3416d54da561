#include "malcev/documents.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace malcev {

namespace {

using J = nlohmann::ordered_json;

J parse_root(const std::string& text) {
  J j;
  try {
    j = J::parse(text);
  } catch (const J::parse_error& e) {
    throw SchemaError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("document root must be a JSON object");
  return j;
}

void check_keys(const J& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw SchemaError("unknown field \"" + item.key() + "\" in " + where);
}

const J& require(const J& j, const std::string& field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) throw SchemaError(where + ": missing field \"" + field + "\"");
  return *it;
}

long long get_int(const J& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return v.get<long long>();
}

// strict digits-only grammar; GMP itself would silently skip whitespace
bool digit_run(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational get_rational(const J& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    const bool num_ok = digit_run(num, num.size() > 0 && num[0] == '-' ? 1 : 0);
    if (!num_ok || !digit_run(den, 0))
      throw SchemaError(where + ": malformed rational \"" + s + "\"");
    mpz_class d(den);
    if (d == 0) throw SchemaError(where + ": zero denominator in \"" + s + "\"");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
  }
  throw SchemaError(where + ": rationals must be integers or strings \"p/q\"");
}

Vec get_vector(const J& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array of rationals");
  Vec out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix get_matrix(const J& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw SchemaError(where + ": expected a non-empty array of rows");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    rows.push_back(get_vector(v[r], where + " row " + std::to_string(r)));
    if (rows.back().size() != rows.front().size())
      throw SchemaError(where + ": rows have unequal lengths");
  }
  return Matrix::from_rows(rows, static_cast<int>(rows.front().size()));
}

std::vector<int> get_int_list(const J& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(static_cast<int>(get_int(v[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

std::optional<long long> get_opt_q(const J& j) {
  auto it = j.find("q");
  if (it == j.end()) return std::nullopt;
  long long q = get_int(*it, "field \"q\"");
  if (q < 2) throw SchemaError("field \"q\": prime power must be at least 2");
  return q;
}

DocumentKind kind_of(const J& root) {
  const J& k = require(root, "kind", "document");
  if (!k.is_string()) throw SchemaError("field \"kind\" must be a string");
  const std::string s = k.get<std::string>();
  if (s == "cohomology") return DocumentKind::cohomology;
  if (s == "open_variety") return DocumentKind::open_variety;
  if (s == "frobenius") return DocumentKind::frobenius;
  if (s == "cech") return DocumentKind::cech;
  throw SchemaError("unknown document kind \"" + s + "\"");
}

std::vector<Matrix> get_cup(const J& root, int h2_dim, int h1_dim) {
  std::vector<Matrix> cup;
  auto it = root.find("cup");
  if (it == root.end()) {
    cup.assign(h2_dim, Matrix(h1_dim, h1_dim));
    return cup;
  }
  if (!it->is_array()) throw SchemaError("field \"cup\": expected an array of matrices");
  for (std::size_t k = 0; k < it->size(); ++k)
    cup.push_back(get_matrix((*it)[k], "cup[" + std::to_string(k) + "]"));
  return cup;
}

}  // namespace

DocumentKind document_kind(const std::string& text) { return kind_of(parse_root(text)); }

ParsedCohomology parse_cohomology_document(const std::string& text) {
  J root = parse_root(text);
  ParsedCohomology out;
  out.kind = kind_of(root);
  if (out.kind == DocumentKind::cohomology) {
    check_keys(root, {"kind", "q", "h1_dim", "h1_weights", "h2_dim", "h2_weights", "cup"},
               "a cohomology document");
    CohomologyDatum d;
    d.q = get_opt_q(root);
    d.h1_dim = static_cast<int>(get_int(require(root, "h1_dim", "document"), "field \"h1_dim\""));
    d.h2_dim = static_cast<int>(get_int(require(root, "h2_dim", "document"), "field \"h2_dim\""));
    if (d.h1_dim < 0 || d.h2_dim < 0) throw SchemaError("cohomology dimensions must be >= 0");
    d.h1_weights = root.contains("h1_weights")
                       ? get_int_list(root["h1_weights"], "field \"h1_weights\"")
                       : std::vector<int>(d.h1_dim, 1);
    d.h2_weights = root.contains("h2_weights")
                       ? get_int_list(root["h2_weights"], "field \"h2_weights\"")
                       : std::vector<int>(d.h2_dim, 2);
    d.cup = get_cup(root, d.h2_dim, d.h1_dim);
    out.datum = std::move(d);
    return out;
  }
  if (out.kind == DocumentKind::open_variety) {
    check_keys(root, {"kind", "q", "h1_compact_dim", "boundary_dim", "h2_dim", "cup"},
               "an open_variety document");
    OpenVarietyDatum d;
    d.q = get_opt_q(root);
    d.h1_compact_dim = static_cast<int>(
        get_int(require(root, "h1_compact_dim", "document"), "field \"h1_compact_dim\""));
    d.boundary_dim =
        static_cast<int>(get_int(require(root, "boundary_dim", "document"), "field \"boundary_dim\""));
    d.h2_dim = static_cast<int>(get_int(require(root, "h2_dim", "document"), "field \"h2_dim\""));
    if (d.h1_compact_dim < 0 || d.boundary_dim < 0 || d.h2_dim < 0)
      throw SchemaError("open_variety dimensions must be >= 0");
    d.cup = get_cup(root, d.h2_dim, d.h1_compact_dim + d.boundary_dim);
    out.datum = d.to_cohomology();
    return out;
  }
  throw SchemaError("expected a cohomology or open_variety document");
}

FrobeniusDocument parse_frobenius_document(const std::string& text) {
  J root = parse_root(text);
  if (kind_of(root) != DocumentKind::frobenius)
    throw SchemaError("expected a frobenius document");
  check_keys(root, {"kind", "q", "matrix", "generator_weights", "k_generators"},
             "a frobenius document");
  FrobeniusDocument d;
  d.q = get_opt_q(root);
  d.matrix = get_matrix(require(root, "matrix", "document"), "field \"matrix\"");
  if (d.matrix.rows() != d.matrix.cols())
    throw SchemaError("field \"matrix\": must be square");
  if (root.contains("generator_weights")) {
    auto w = get_int_list(root["generator_weights"], "field \"generator_weights\"");
    if (static_cast<int>(w.size()) != d.matrix.rows())
      throw SchemaError("field \"generator_weights\": need one weight per matrix row");
    for (int x : w)
      if (x > -1) throw SchemaError("field \"generator_weights\": weights must be <= -1");
    d.generator_weights = std::move(w);
  }
  if (root.contains("k_generators")) {
    if (!d.generator_weights)
      throw SchemaError("field \"k_generators\" requires \"generator_weights\"");
    if (!root["k_generators"].is_array())
      throw SchemaError("field \"k_generators\": expected an array of vectors");
    std::vector<Vec> ks;
    for (std::size_t i = 0; i < root["k_generators"].size(); ++i) {
      ks.push_back(get_vector(root["k_generators"][i],
                              "k_generators[" + std::to_string(i) + "]"));
      if (static_cast<int>(ks.back().size()) != d.matrix.rows())
        throw SchemaError("k_generators[" + std::to_string(i) +
                          "]: length must match the matrix size");
    }
    d.k_generators = std::move(ks);
  }
  return d;
}

CechInput parse_cech_document(const std::string& text) {
  J root = parse_root(text);
  if (kind_of(root) != DocumentKind::cech) throw SchemaError("expected a cech document");
  check_keys(root, {"kind", "open_count", "patches", "restrictions"}, "a cech document");
  CechInput in;
  in.open_count =
      static_cast<int>(get_int(require(root, "open_count", "document"), "field \"open_count\""));
  const J& patches = require(root, "patches", "document");
  if (!patches.is_array()) throw SchemaError("field \"patches\": expected an array");
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const std::string where = "patches[" + std::to_string(i) + "]";
    const J& p = patches[i];
    if (!p.is_object()) throw SchemaError(where + ": expected an object");
    check_keys(p, {"opens", "dim"}, where);
    CechPatch patch;
    patch.opens = get_int_list(require(p, "opens", where), where + ".opens");
    patch.dim = static_cast<int>(get_int(require(p, "dim", where), where + ".dim"));
    in.patches.push_back(std::move(patch));
  }
  if (root.contains("restrictions")) {
    const J& rs = root["restrictions"];
    if (!rs.is_array()) throw SchemaError("field \"restrictions\": expected an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string where = "restrictions[" + std::to_string(i) + "]";
      const J& r = rs[i];
      if (!r.is_object()) throw SchemaError(where + ": expected an object");
      check_keys(r, {"from", "to", "map"}, where);
      CechRestriction cr;
      cr.from = get_int_list(require(r, "from", where), where + ".from");
      cr.to = get_int_list(require(r, "to", where), where + ".to");
      cr.map = get_matrix(require(r, "map", where), where + ".map");
      in.restrictions.push_back(std::move(cr));
    }
  }
  return in;
}

namespace {

std::string scalar_str(const J& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(const J& v) { return !v.is_object() && !v.is_array(); }

bool scalar_array(const J& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const J& x) { return is_scalar(x); });
}

std::string inline_str(const J& v) {
  if (is_scalar(v)) return scalar_str(v);
  return v.dump();  // compact one-line fallback for nested values
}

void render_rows(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    os << "  ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
}

void render_object_array(std::ostringstream& os, const std::string& key, const J& arr) {
  os << key << ":\n";
  if (arr.empty()) {
    os << "  (none)\n";
    return;
  }
  std::vector<std::string> columns;
  for (const J& row : arr)
    for (const auto& item : row.items())
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end())
        columns.push_back(item.key());
  std::vector<std::vector<std::string>> rows;
  rows.push_back(columns);
  for (const J& row : arr) {
    std::vector<std::string> cells;
    for (const std::string& c : columns)
      cells.push_back(row.contains(c) ? inline_str(row[c]) : "");
    rows.push_back(std::move(cells));
  }
  render_rows(os, rows);
}

}  // namespace

std::string render_report_table(const std::string& json_text) {
  J j;
  try {
    j = J::parse(json_text);
  } catch (const J::parse_error& e) {
    throw std::logic_error(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::logic_error("report root must be an object");
  std::ostringstream os;
  for (const auto& item : j.items()) {
    const J& v = item.value();
    if (is_scalar(v) || scalar_array(v)) {
      os << item.key() << ": " << inline_str(v) << "\n";
    } else if (v.is_array()) {
      render_object_array(os, item.key(), v);
    } else {
      os << item.key() << ":\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& sub : v.items()) rows.push_back({sub.key(), inline_str(sub.value())});
      render_rows(os, rows);
    }
  }
  return os.str();
}

}  // namespace malcev
