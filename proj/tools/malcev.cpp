#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "malcev/pipelines.hpp"
#include "malcev/weights.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw malcev::SchemaError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const malcev::Report& r, bool json_only) {
  if (!json_only) std::cout << r.table << "\n";
  std::cout << r.json_text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational toolkit for nilpotent Lie algebras, weight "
               "decompositions, and cover cohomology"};
  app.require_subcommand(1);

  malcev::PipelineOptions opt;
  std::string file, x_spec, y_spec, generator_csv;
  bool json_only = false;

  CLI::App* present = app.add_subcommand(
      "present", "quadratic presentation of the fundamental Lie algebra of a datum");
  present->add_option("file", file, "input document (kind cohomology or open_variety)")
      ->required();
  present->add_option("-n,--class", opt.class_bound, "nilpotency class bound")
      ->capture_default_str();
  present->add_flag("--weights", opt.weight_graded,
                    "include the per-weight dimension table");
  present->add_flag("--json", json_only, "machine output only");
  present->callback([&] { emit(malcev::run_present(slurp(file), opt), json_only); });

  CLI::App* weights = app.add_subcommand(
      "weights", "weight classification and decomposition of a Frobenius action");
  weights->add_option("file", file, "input document (kind frobenius)")->required();
  weights->add_option("--q", opt.q, "prime power; overrides the document value");
  weights->add_option("--tol", opt.tol, "classification tolerance")->capture_default_str();
  weights->add_option("-n,--class", opt.class_bound,
                      "nilpotency class bound for the graded extension")
      ->capture_default_str();
  weights->add_flag("--json", json_only, "machine output only");
  weights->callback([&] { emit(malcev::run_weights(slurp(file), opt), json_only); });

  CLI::App* cech =
      app.add_subcommand("cech", "cohomology of the cosimplicial algebra of a cover");
  cech->alias("cohomology");
  cech->add_option("file", file, "input document (kind cech)")->required();
  cech->add_option("-m,--level", opt.top_level, "cosimplicial truncation level")
      ->capture_default_str();
  cech->add_flag("--json", json_only, "machine output only");
  cech->callback([&] { emit(malcev::run_cech(slurp(file), opt), json_only); });

  CLI::App* bch = app.add_subcommand(
      "bch", "Campbell-Hausdorff product of two degree-1 elements");
  bch->add_option("x", x_spec, "first element, e.g. \"x\" or \"x - 2/3*y\"")->required();
  bch->add_option("y", y_spec, "second element")->required();
  bch->add_option("-n,--class", opt.class_bound, "nilpotency class bound")
      ->capture_default_str();
  bch->add_option("--generators", generator_csv,
                  "comma-separated generator names; default: names used in the specs");
  bch->add_flag("--json", json_only, "machine output only");
  bch->callback(
      [&] { emit(malcev::run_bch(x_spec, y_spec, generator_csv, opt), json_only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const malcev::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const malcev::InconclusiveClassification& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 4;
  } catch (const malcev::NotPureFactor& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
