// hnlab: command-line front end for the hypercomplex Lie algebra analyzer.
//
// Exit codes: 0 success, 1 verification failures, 2 usage errors (bad
// flags, unknown algebra, empty grid, duplicate name, malformed file),
// 3 parameter point outside the domain, 4 Jacobi identity failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hnlab/analysis.hpp"
#include "hnlab/registry.hpp"
#include "hnlab/report.hpp"
#include "hnlab/sweep.hpp"
#include "hnlab/verify.hpp"

namespace {

using namespace hnlab;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitJacobi = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LieAlgebraSpec resolve_algebra(const std::string& name_or_file) {
  if (std::filesystem::is_regular_file(name_or_file)) return load_algebra(Registry::read_file(name_or_file));
  try {
    return catalog_get(name_or_file, Registry::open_default().load_all());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Assignment point_from(const LieAlgebraSpec& alg, const std::string& a, const std::string& b) {
  Assignment at{{"a", Rational::parse(a)}, {"b", Rational::parse(b)}};
  for (const auto& n : alg.params.names())
    if (!at.count(n)) throw UsageError("algebra " + alg.name + " has parameter '" + n + "' that --a/--b cannot set");
  alg.check_point(at);
  return at;
}

int cmd_analyze(const std::string& algebra, bool symbolic, const std::optional<std::string>& a,
                const std::optional<std::string>& b, bool json) {
  if (symbolic == (a || b)) throw UsageError("analyze needs either --symbolic or both --a and --b");
  if (!symbolic && !(a && b)) throw UsageError("point mode needs both --a and --b");
  const auto alg = resolve_algebra(algebra);
  std::optional<Assignment> at;
  if (!symbolic) at = point_from(alg, *a, *b);

  const auto an = analyze(alg, at);
  const auto report = make_report(an);
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  print_report(std::cout, report, standard_frame());
  if (symbolic) {
    std::cout << "\nclassification by parameter region (J1 | J2 | J3)\n";
    print_table(std::cout, classification_table(alg, standard_frame(), standard_classifiers()));
  }
  return 0;
}

int cmd_verify(bool failures_only) {
  const auto res = verify_reference();
  for (const auto& c : res.checks) {
    if (failures_only && c.passed) continue;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.name;
    if (!c.passed) std::cout << "\n     reference: " << c.expected << "\n     computed:  " << c.computed;
    std::cout << "\n";
  }
  for (const auto& n : res.notes) std::cout << "note " << n << "\n";
  std::cout << res.passed() << " checks passed, " << res.failed() << " failed\n";
  return res.failed() == 0 ? 0 : kExitVerify;
}

int cmd_sweep(const std::string& algebra, const std::string& a_range, const std::string& b_range, bool json,
              unsigned threads) {
  const auto alg = resolve_algebra(algebra);
  const auto as = GridRange::parse(a_range).values();
  const auto bs = GridRange::parse(b_range).values();
  if (as.empty() || bs.empty()) throw UsageError("empty parameter grid");
  for (const auto& n : alg.params.names())
    if (n != "a" && n != "b") throw UsageError("algebra " + alg.name + " has parameter '" + n + "' outside the a/b grid");

  const auto symbolic = analyze(alg);
  const auto res = sweep(symbolic, as, bs, threads == 0 ? std::thread::hardware_concurrency() : threads);
  std::vector<std::string> planes;
  for (const auto& e : symbolic.sectional) planes.push_back("k" + e.plane.label());

  if (json) {
    nlohmann::json out;
    out["algebra"] = alg.name;
    out["skipped"] = res.skipped;
    auto pts = nlohmann::json::array();
    for (const auto& p : res.points) {
      nlohmann::json sect = nlohmann::json::object();
      for (std::size_t k = 0; k < planes.size(); ++k) sect[planes[k]] = p.sectional_signs[k];
      pts.push_back({{"a", p.at.at("a").to_string()},
                     {"b", p.at.at("b").to_string()},
                     {"tau", p.tau_sign},
                     {"tau**", p.tau_star_star_signs},
                     {"sectional", sect},
                     {"classes", {p.classes[0].to_string(), p.classes[1].to_string(), p.classes[2].to_string()}}});
    }
    out["points"] = pts;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto s = [](int v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; };
  std::cout << "a\tb\ttau\ttau**_1\ttau**_2\ttau**_3";
  for (const auto& p : planes) std::cout << "\t" << p;
  std::cout << "\tJ1\tJ2\tJ3\n";
  for (const auto& p : res.points) {
    std::cout << p.at.at("a") << "\t" << p.at.at("b") << "\t" << s(p.tau_sign);
    for (int v : p.tau_star_star_signs) std::cout << "\t" << s(v);
    for (int v : p.sectional_signs) std::cout << "\t" << s(v);
    for (const auto& c : p.classes) std::cout << "\t" << c.to_string();
    std::cout << "\n";
  }
  std::cerr << res.points.size() << " points evaluated, " << res.skipped << " skipped by domain constraints\n";
  return 0;
}

int cmd_catalog_list() {
  const auto registry = Registry::open_default();
  auto print = [](const LieAlgebraSpec& alg, const char* origin) {
    std::cout << alg.name << " (" << origin << ")";
    if (!alg.params.names().empty()) {
      std::cout << " params:";
      for (const auto& n : alg.params.names()) std::cout << " " << n;
    }
    std::cout << "\n";
    for (const auto& b : bracket_strings(alg)) std::cout << "  " << b << "\n";
    for (const auto& c : alg.constraints) std::cout << "  " << c.to_string() << "\n";
  };
  for (const auto& alg : builtin_catalog()) print(alg, "built-in");
  for (const auto& alg : registry.load_all()) print(alg, "registered");
  return 0;
}

int cmd_catalog_add(const std::string& file) {
  if (!std::filesystem::is_regular_file(file)) throw UsageError("no such file: " + file);
  const auto alg = load_algebra(Registry::read_file(file));
  try {
    auto path = Registry::open_default().add(alg);
    std::cerr << "registered " << alg.name << " at " << path.string() << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of hypercomplex structures with Hermitian-Norden metrics on 4-dimensional Lie algebras"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Compute all tensors, curvature and classes of an algebra");
  std::string algebra;
  bool symbolic = false, json = false;
  std::optional<std::string> a, b;
  analyze_cmd->add_option("--algebra", algebra, "Catalog name or definition file")->required();
  analyze_cmd->add_flag("--symbolic", symbolic, "Keep the parameters symbolic");
  analyze_cmd->add_option("--a", a, "Value of a (p/q or decimal)");
  analyze_cmd->add_option("--b", b, "Value of b (p/q or decimal)");
  analyze_cmd->add_flag("--json", json, "Emit the report as JSON");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Compare computed values with the reference results");
  bool failures_only = false;
  verify_cmd->add_flag("--failures-only", failures_only, "Print only failed checks");

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate signs and classes on a parameter grid");
  std::string sweep_algebra, a_range, b_range;
  bool sweep_json = false;
  unsigned threads = 0;
  sweep_cmd->add_option("--algebra", sweep_algebra, "Catalog name or definition file")->required();
  sweep_cmd->add_option("--a-range", a_range, "lo:hi:step")->required();
  sweep_cmd->add_option("--b-range", b_range, "lo:hi:step")->required();
  sweep_cmd->add_flag("--json", sweep_json, "Emit JSON");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* catalog_cmd = app.add_subcommand("catalog", "List or register algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "Show built-in and registered algebras");
  auto* add_cmd = catalog_cmd->add_subcommand("add", "Validate and register a definition file");
  std::string add_file;
  add_cmd->add_option("file", add_file, "Algebra definition file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(algebra, symbolic, a, b, json);
    if (verify_cmd->parsed()) return cmd_verify(failures_only);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_algebra, a_range, b_range, sweep_json, threads);
    if (list_cmd->parsed()) return cmd_catalog_list();
    if (add_cmd->parsed()) return cmd_catalog_add(add_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const JacobiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitJacobi;
  }
  return kExitUsage;
}
