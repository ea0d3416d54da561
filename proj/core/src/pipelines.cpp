#include "malcev/pipelines.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "malcev/bch.hpp"
#include "malcev/cosimplicial.hpp"
#include "malcev/polynomial.hpp"
#include "malcev/weights.hpp"

namespace malcev {

namespace {

using J = nlohmann::ordered_json;

Report make_report(const J& j) {
  Report r;
  r.json_text = j.dump(2) + "\n";
  r.table = render_report_table(r.json_text);
  return r;
}

J check_entry(const std::string& name, bool pass, const std::vector<std::string>& failures) {
  J e;
  e["name"] = name;
  e["pass"] = pass;
  if (!failures.empty()) e["failures"] = failures;
  return e;
}

J check_entry(const std::string& name, const LieCheckReport& r) {
  return check_entry(name, r.pass, r.failures);
}

J check_entry(const std::string& name, const CheckReport& r) {
  return check_entry(name, r.pass, r.failures);
}

}  // namespace

Report run_present(const std::string& document_text, const PipelineOptions& opt) {
  ParsedCohomology doc = parse_cohomology_document(document_text);
  Presentation p = build_presentation(doc.datum, opt.class_bound);

  J j;
  j["command"] = "present";
  j["kind"] = doc.kind == DocumentKind::open_variety ? "open_variety" : "cohomology";
  j["class_bound"] = opt.class_bound;
  j["h1_dim"] = doc.datum.h1_dim;
  j["relation_rank"] = p.ideal.size() >= 2 ? p.ideal[1].dim() : 0;

  J rels = J::array();
  std::size_t next_dropped = 0;
  std::size_t rel_index = 0;
  for (int k = 0; k < doc.datum.h2_dim; ++k) {
    if (next_dropped < p.dropped.size() && p.dropped[next_dropped] == k) {
      ++next_dropped;
      continue;
    }
    J r;
    r["h2_index"] = k;
    r["weight"] = -doc.datum.h2_weights[k];
    r["element"] = p.relations[rel_index++].str();
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  j["dropped_relations"] = p.dropped;

  j["free_dims"] = p.free_algebra->dims();
  J ideal_dims = J::array();
  for (const Subspace& jd : p.ideal) ideal_dims.push_back(jd.dim());
  j["ideal_dims"] = std::move(ideal_dims);
  j["quotient_dims"] = p.quotient->dims();

  if (opt.weight_graded) {
    J table = J::array();
    for (int d = 1; d <= p.quotient->class_bound(); ++d) {
      std::map<int, int> by_weight;
      for (int i = 0; i < p.quotient->total_dim(); ++i)
        if (p.quotient->element(i).degree == d) ++by_weight[p.quotient->element(i).weight];
      J row;
      row["degree"] = d;
      row["dim"] = p.quotient->degree_dim(d);
      J w;
      for (const auto& [weight, count] : by_weight) w[std::to_string(weight)] = count;
      row["by_weight"] = std::move(w);
      table.push_back(std::move(row));
    }
    j["weight_graded"] = std::move(table);
  }

  J checks = J::array();
  checks.push_back(check_entry("tangent_surjection", tangent_surjection_check(p)));
  checks.push_back(check_entry("lie_axioms", verify_graded_lie(*p.quotient)));
  j["checks"] = std::move(checks);
  return make_report(j);
}

Report run_weights(const std::string& document_text, const PipelineOptions& opt) {
  FrobeniusDocument doc = parse_frobenius_document(document_text);
  const long long q = opt.q > 0 ? opt.q : doc.q.value_or(0);
  if (q < 2)
    throw SchemaError("no prime power given: set the document field \"q\" or pass --q");
  WeilOptions wopt;
  wopt.q = q;
  wopt.tol = opt.tol;

  J j;
  j["command"] = "weights";
  j["q"] = q;
  j["tol"] = opt.tol;
  j["matrix_dim"] = doc.matrix.rows();

  Polynomial chi = char_poly(doc.matrix);
  j["characteristic_polynomial"] = chi.str();
  J factors = J::array();
  for (const ClassifiedFactor& f : weil_classify(squarefree_factors(chi), wopt)) {
    J row;
    row["factor"] = f.factor.str();
    row["multiplicity"] = f.multiplicity;
    if (f.weight)
      row["weight"] = *f.weight;
    else
      row["weight"] = nullptr;  // the squarefree factor mixes several norms
    factors.push_back(std::move(row));
  }
  j["factors"] = std::move(factors);

  WeightDecomposition dec = frobenius_weight_decomposition(doc.matrix, wopt);
  J pieces = J::array();
  for (const auto& [w, s] : dec.pieces) {
    J row;
    row["weight"] = w;
    row["dim"] = s.dim();
    pieces.push_back(std::move(row));
  }
  j["pieces"] = std::move(pieces);

  J checks = J::array();
  if (doc.generator_weights) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < doc.generator_weights->size(); ++i)
      gens.push_back({"g" + std::to_string(i + 1), (*doc.generator_weights)[i]});
    AlgebraPtr alg = GradedLieAlgebra::free_nilpotent(gens, opt.class_bound);
    FrobeniusAction F;
    F.q = q;
    F.matrices = extend_frobenius(alg, doc.matrix);
    std::vector<WeightDecomposition> decs = algebra_weight_decomposition(alg, F, wopt);

    J degrees = J::array();
    for (int d = 1; d <= alg->class_bound(); ++d) {
      J row;
      row["degree"] = d;
      row["dim"] = alg->degree_dim(d);
      J per = J::array();
      for (const auto& [w, s] : decs[d - 1].pieces) {
        J pw;
        pw["weight"] = w;
        pw["dim"] = s.dim();
        per.push_back(std::move(pw));
      }
      row["pieces"] = std::move(per);
      degrees.push_back(std::move(row));
    }
    j["degrees"] = std::move(degrees);
    checks.push_back(check_entry("bracket_additivity", check_bracket_additivity(alg, F, decs)));

    if (doc.k_generators) {
      Subspace K = Subspace::span(alg->degree_dim(1), *doc.k_generators);
      WeightFiltration filt = weight_filtration(alg, K);
      J levels = J::array();
      for (const auto& [n, s] : filt.levels) {
        J row;
        row["level"] = n;
        row["dim"] = s.dim();
        levels.push_back(std::move(row));
      }
      j["filtration"] = std::move(levels);
      checks.push_back(check_entry("splitting", check_splitting(alg, decs, filt)));
      checks.push_back(check_entry("purity", purity_report(alg, decs, filt)));
    }
  }
  j["checks"] = std::move(checks);
  return make_report(j);
}

Report run_cech(const std::string& document_text, const PipelineOptions& opt) {
  CechInput in = parse_cech_document(document_text);
  CosimplicialAlgebra A = cech_build(in, opt.top_level);
  const CosimplicialSpace& C = A.space();

  J j;
  j["command"] = "cech";
  j["top_level"] = opt.top_level;
  J dims = J::array();
  for (int n = 0; n <= C.top_level(); ++n) dims.push_back(C.dim(n));
  j["level_dims"] = std::move(dims);

  Cohomology H = cohomology(C);
  j["cohomology"] = H.dims;

  // squares of the low-degree classes, when there is room to verify them
  if (opt.top_level >= 3 && H.dims.size() >= 2 && H.dims[1] > 0) {
    const Matrix D1 = moore_differential(C, 1);
    const Matrix D2 = moore_differential(C, 2);
    const Subspace image = column_space(D1);
    J cups = J::array();
    const std::size_t shown = std::min<std::size_t>(H.representatives[1].size(), 4);
    for (std::size_t a = 0; a < shown; ++a)
      for (std::size_t b = 0; b < shown; ++b) {
        Vec cup = aw_cup(A, 1, H.representatives[1][a], 1, H.representatives[1][b]);
        bool cocycle = true;
        for (const Rational& x : D2.apply(cup))
          if (!x.is_zero()) cocycle = false;
        J row;
        row["i"] = a;
        row["j"] = b;
        row["cocycle"] = cocycle;
        row["coboundary"] = image.contains(cup);
        cups.push_back(std::move(row));
      }
    j["cup_products"] = std::move(cups);
  }

  J checks = J::array();
  checks.push_back(check_entry("cosimplicial_identities", verify_cosimplicial(C)));
  checks.push_back(check_entry("algebra_axioms", verify_cosimplicial_algebra(A)));
  j["checks"] = std::move(checks);
  return make_report(j);
}

namespace {

void collect_names(const std::string& s, std::set<std::string>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t ji = i;
      while (ji < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[ji])) || s[ji] == '_'))
        ++ji;
      out.insert(s.substr(i, ji - i));
      i = ji;
    } else {
      ++i;
    }
  }
}

LieElement parse_element_spec(const AlgebraPtr& alg, const std::string& s) {
  LieElement acc(alg);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto context = [&] { return s.substr(0, i) + " <here> " + s.substr(i); };
  skip();
  if (i == s.size()) throw SchemaError("empty element spec");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw SchemaError("expected + or - in element spec: " + context());
    }
    Rational coeff(sign);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t ji = i;
      while (ji < s.size() && std::isdigit(static_cast<unsigned char>(s[ji]))) ++ji;
      mpz_class num(s.substr(i, ji - i));
      i = ji;
      mpz_class den(1);
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw SchemaError("malformed rational in element spec: " + context());
        den = mpz_class(s.substr(i, k - i));
        if (den == 0) throw SchemaError("zero denominator in element spec");
        i = k;
      }
      mpq_class v(num, den);
      v.canonicalize();
      coeff = Rational(sign) * Rational(v);
      have_coeff = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      std::size_t ji = i;
      while (ji < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[ji])) || s[ji] == '_'))
        ++ji;
      const std::string name = s.substr(i, ji - i);
      i = ji;
      try {
        acc += alg->generator(name).scaled(coeff);
      } catch (const std::invalid_argument&) {
        throw SchemaError("unknown generator \"" + name + "\"");
      }
    } else if (!have_coeff) {
      throw SchemaError("expected a term in element spec: " + context());
    } else if (!(coeff == Rational(0))) {
      // bare numbers other than 0 have no home in the algebra
      throw SchemaError("nonzero constant term in element spec");
    }
    first = false;
    skip();
  }
  return acc;
}

}  // namespace

Report run_bch(const std::string& x_spec, const std::string& y_spec,
               const std::string& generator_csv, const PipelineOptions& opt) {
  std::vector<std::string> names;
  if (!generator_csv.empty()) {
    std::stringstream ss(generator_csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto b = part.find_first_not_of(" \t");
      const auto e = part.find_last_not_of(" \t");
      if (b == std::string::npos) throw SchemaError("empty name in generator list");
      names.push_back(part.substr(b, e - b + 1));
    }
  } else {
    std::set<std::string> seen;
    collect_names(x_spec, seen);
    collect_names(y_spec, seen);
    names.assign(seen.begin(), seen.end());
  }
  if (names.empty())
    throw SchemaError("the element specs name no generators; nothing to build");

  std::vector<Generator> gens;
  for (const std::string& n : names) gens.push_back({n, -1});
  AlgebraPtr alg = GradedLieAlgebra::free_nilpotent(gens, opt.class_bound);

  LieElement x = parse_element_spec(alg, x_spec);
  LieElement y = parse_element_spec(alg, y_spec);
  LieElement z = bch(x, y);

  J j;
  j["command"] = "bch";
  j["class_bound"] = opt.class_bound;
  j["generators"] = names;
  j["x"] = x.str();
  j["y"] = y.str();
  j["result"] = z.str();
  J terms = J::array();
  Vec coords = z.total_coords();
  for (int idx = 0; idx < alg->total_dim(); ++idx) {
    if (coords[idx].is_zero()) continue;
    J t;
    t["basis"] = alg->element(idx).name;
    t["degree"] = alg->element(idx).degree;
    t["coefficient"] = coords[idx].str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return make_report(j);
}

}  // namespace malcev
