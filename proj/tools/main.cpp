#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twistindex/braid.hpp"
#include "twistindex/census.hpp"
#include "twistindex/selfcheck.hpp"
#include "twistindex/verifier.hpp"

namespace {

using namespace twistindex;

int run_enumerate(int n, int k, const std::string& out_path, std::size_t budget,
                  bool no_guard) {
  CensusOptions opts;
  opts.enforce_guard = !no_guard;
  if (budget > 0) opts.leaf_budget = budget;
  const auto census = enumerate_transitive(n, k, opts);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 1;
    }
    out = &file;
  }
  for (const CensusEntry& e : census) *out << census_entry_to_json(e).dump() << "\n";
  std::cerr << census.size() << " conjugacy classes\n";
  return 0;
}

int run_classify(const std::string& in_path, const std::string& format) {
  std::ifstream file(in_path);
  if (!file) {
    std::cerr << "error: cannot open " << in_path << "\n";
    return 1;
  }
  nlohmann::json doc = nlohmann::json::parse(file);
  if (!doc.is_array()) doc = nlohmann::json::array({doc});
  for (const auto& item : doc) {
    const BraidHom h = hom_from_json(item);
    const Classification c = classify(h);
    if (format == "json") {
      nlohmann::json j = {{"n", h.strands()},
                          {"k", h.target_degree()},
                          {"label", label_to_json(c.label)},
                          {"label_text", c.label.to_string()},
                          {"small_n", c.small_n}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << c.label.to_string();
      if (c.small_n) std::cout << "  (small-n: taxonomy not exhaustive)";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_lin(int n, int variant) {
  const BraidHom h = lin_hom(variant, n);
  for (int i = 1; i <= n - 1; ++i)
    std::cout << "sigma_" << i << " -> " << format_perm(h.image(i)) << "\n";
  const auto violations = check_relations(n, h.target_degree(), h.images());
  std::cout << "relation check: " << (violations.empty() ? "pass" : "fail") << "\n";
  std::cout << "transitive: " << (h.is_transitive() ? "yes" : "no") << "\n";
  return violations.empty() ? 0 : 1;
}

int run_verify(int genus, const std::string& report_path, int workers,
               std::size_t budget, const std::string& format,
               bool cross_validate) {
  CheckOptions opts;
  if (budget > 0) opts.candidate_cap = budget;
  if (cross_validate) {
    opts.use_parity_fastpath = false;
    opts.use_cyclic_fastpath = false;
  }
  const TheoremVerdict v = verify_theorem(genus, workers, opts);
  const std::string text =
      format == "json" ? verdict_to_json(v).dump(2) + "\n" : verdict_to_text(v);
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) {
      std::cerr << "error: cannot open " << report_path << "\n";
      return 1;
    }
    file << verdict_to_json(v).dump(2) << "\n";
  }
  std::cout << text;
  return v.no_nontrivial_hom ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation representations of braid groups and the small-index "
               "subgroup verifier for mapping class groups"};
  app.require_subcommand(1);

  int n = 8, k = 8, variant = 1, genus = 3, workers = 1;
  std::size_t budget = 0;
  std::string out_path, in_path, report_path, format = "text";
  bool no_guard = false, cross_validate = false;
  uint64_t seed = 12345;

  auto* cmd_enum = app.add_subcommand("enumerate",
                                      "census of transitive homomorphisms up to conjugacy");
  cmd_enum->add_option("--n", n, "number of strands")->required();
  cmd_enum->add_option("--k", k, "target degree")->required();
  cmd_enum->add_option("--out", out_path, "output file (JSONL; default stdout)");
  cmd_enum->add_option("--budget", budget, "search-leaf budget override");
  cmd_enum->add_flag("--no-guard", no_guard, "lift the k <= 10, n <= 8 guard");

  auto* cmd_classify = app.add_subcommand("classify", "label homomorphisms from JSON");
  cmd_classify->add_option("--in", in_path, "input JSON file")->required();
  cmd_classify->add_option("--format", format, "json or text");

  auto* cmd_lin = app.add_subcommand("lin", "print a Lin homomorphism");
  cmd_lin->add_option("--n", n, "number of strands")->required();
  cmd_lin->add_option("--variant", variant, "variant 1, 2 or 3")->required();

  auto* cmd_verify = app.add_subcommand("verify-theorem",
                                        "run the case sweep for a given genus");
  cmd_verify->add_option("--genus", genus, "genus (3..15)")->required();
  cmd_verify->add_option("--report", report_path, "write the JSON report here");
  cmd_verify->add_option("--workers", workers, "worker thread count");
  cmd_verify->add_option("--budget", budget, "candidate cap override");
  cmd_verify->add_option("--format", format, "json or text");
  cmd_verify->add_flag("--cross-validate", cross_validate,
                       "disable the fast paths and run the full pipeline");

  auto* cmd_selfcheck = app.add_subcommand("selfcheck", "run the oracle suites");
  cmd_selfcheck->add_option("--seed", seed, "RNG seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_enum->parsed())
      return run_enumerate(n, k, out_path, budget, no_guard);
    if (cmd_classify->parsed()) return run_classify(in_path, format);
    if (cmd_lin->parsed()) return run_lin(n, variant);
    if (cmd_verify->parsed())
      return run_verify(genus, report_path, workers, budget, format, cross_validate);
    if (cmd_selfcheck->parsed())
      return twistindex::run_selfcheck(std::cout, seed) ? 0 : 1;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
