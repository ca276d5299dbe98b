// kat: decide equivalence and inclusion of KAT expressions.
//
//   kat check [--method brz|ant|iy] [--algo naive|symb|dsf] [--mode equiv|incl]
//             [--stats] --tests a,b --letters p,q E1 E2
//   kat bench --tests 7 --letters 7 --connectives 70 --pairs 100 --seed N --out results.csv
//
// Exit status: 0 when the relation holds, 1 when it does not, 2 on errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symkat/cli/bench.hpp"
#include "symkat/cli/check.hpp"
#include "symkat/construct/derivatives.hpp"
#include "symkat/kat/parser.hpp"

namespace {

int run_check(const std::vector<std::string>& tests, const std::vector<std::string>& letters,
              const std::string& method, const std::string& algo, const std::string& mode,
              bool stats, std::size_t naive_cap, std::size_t state_cap, const std::string& e1,
              const std::string& e2) {
  using namespace symkat;
  kat::Signature sig{tests, letters};
  cli::CheckConfig cfg;
  cfg.construction = cli::parse_construction(method);
  cfg.algorithm = cli::parse_algorithm(algo);
  cfg.mode = cli::parse_mode(mode);
  cfg.naive_cap = naive_cap;
  cfg.state_cap = state_cap;
  auto x = kat::parse(e1, sig);
  auto y = kat::parse(e2, sig);
  auto r = cli::check(sig, x, y, cfg);
  const bool incl = cfg.mode == cli::Mode::Incl;
  if (r.holds) {
    std::cout << (incl ? "included" : "equivalent") << '\n';
  } else {
    std::cout << (incl ? "not included" : "not equivalent") << '\n';
    std::cout << "counter-example: " << r.witness_text << '\n';
  }
  if (stats) {
    std::cout << "output tests: " << r.stats.output_tests << '\n'
              << "pairs pushed: " << r.stats.pairs_pushed << '\n'
              << "nodes visited: " << r.stats.nodes_visited << '\n'
              << "states: " << r.states << '\n'
              << "millis: " << r.millis << '\n';
  }
  return r.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence and inclusion of KAT expressions"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "compare two expressions");
  std::vector<std::string> tests, letters;
  std::string method = "ant", algo = "symb", mode = "equiv";
  bool stats = false;
  std::size_t naive_cap = std::size_t{1} << 12;
  std::size_t state_cap = 100000;
  std::string e1, e2;
  check->add_option("--method", method, "construction: brz, ant or iy")
      ->check(CLI::IsMember({"brz", "ant", "iy"}));
  check->add_option("--algo", algo, "algorithm: naive, symb or dsf")
      ->check(CLI::IsMember({"naive", "symb", "dsf"}));
  check->add_option("--mode", mode, "equiv or incl")->check(CLI::IsMember({"equiv", "incl"}));
  check->add_flag("--stats", stats, "print counters");
  check->add_option("--tests", tests, "primitive tests")->delimiter(',');
  check->add_option("--letters", letters, "letters")->delimiter(',');
  check->add_option("--naive-cap", naive_cap, "largest explicit alphabet for naive");
  check->add_option("--state-cap", state_cap, "largest automaton explored");
  check->add_option("E1", e1, "left expression")->required();
  check->add_option("E2", e2, "right expression")->required();

  auto* bench = app.add_subcommand("bench", "random saturated pairs");
  symkat::cli::BenchConfig bc;
  std::string out_path;
  bool unsaturated = false;
  bench->add_option("--tests", bc.tests, "number of primitive tests")->check(CLI::PositiveNumber);
  bench->add_option("--letters", bc.letters, "number of letters")->check(CLI::PositiveNumber);
  bench->add_option("--connectives", bc.connectives, "operators per expression");
  bench->add_option("--pairs", bc.pairs, "number of pairs")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bc.seed, "random seed");
  bench->add_flag("--no-saturate", unsaturated, "compare the raw random expressions");
  bench->add_option("--out", out_path, "CSV report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(tests, letters, method, algo, mode, stats, naive_cap, state_cap, e1, e2);
    bc.saturate = !unsaturated;
    auto rows = symkat::cli::bench(bc);
    symkat::cli::write_summary(std::cout, rows, bc);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      symkat::cli::write_csv(out, rows);
    }
    for (const auto& r : rows)
      if (r.verdict == "differ") return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
