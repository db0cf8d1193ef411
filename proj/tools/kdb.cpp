// Command-line front end: classify one variety description per invocation.
//
//   kdb --input spec.json [--format json|text] [--k-max N] [--m-max N]
//   kdb --self-check
//
// Exit codes: 0 every requested verdict decided, 3 at least one Unknown,
// 2 input error, 1 self-check failure or internal error.

#include <kdb/report.hpp>
#include <kdb/self_check.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int self_check() {
  bool ok = true;
  for (const auto& suite : kdb::run_self_check()) {
    std::cout << (suite.passed() ? "PASS" : "FAIL") << "  " << suite.name << " (" << suite.checks << " checks)\n";
    for (const auto& f : suite.failures) std::cout << "      " << f << "\n";
    ok = ok && suite.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide k-Du Bois and k-rational singularities of affine toric varieties and cones"};
  std::string input;
  std::string format = "json";
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> m_max;
  bool run_checks = false;

  app.add_option("--input", input, "variety description (JSON or flat TOML)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--k-max", k_max, "largest k to decide (overrides the file)");
  app.add_option("--m-max", m_max, "number of degrees printed in graded tables");
  app.add_flag("--self-check", run_checks, "run the invariant suites and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kdb::kExitInputError;
  }

  if (run_checks) return self_check();
  if (input.empty()) {
    std::cerr << "kdb: --input is required\n";
    return kdb::kExitInputError;
  }

  std::ifstream file(input, std::ios::binary);
  if (!file) {
    std::cerr << "kdb: cannot read " << input << "\n";
    return kdb::kExitInputError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  try {
    auto spec = kdb::parse_spec(buffer.str());
    auto doc = kdb::run(spec, {k_max, m_max});
    std::cout << (format == "text" ? doc.to_text() : doc.to_json());
    return doc.exit_code;
  } catch (const kdb::Error& e) {
    std::cerr << "kdb: " << e.qualified_code() << ": " << e.what() << "\n";
    return kdb::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "kdb: internal error: " << e.what() << "\n";
    return kdb::kExitInternal;
  }
}
