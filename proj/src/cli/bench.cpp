#include "symkat/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <random>

#include "symkat/cli/random.hpp"
#include "symkat/construct/derivatives.hpp"

namespace symkat::cli {

std::vector<BenchRow> bench(const BenchConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const auto sig = make_signature(cfg.tests, cfg.letters);
  const RandomConfig rc{cfg.tests, cfg.letters, cfg.connectives};
  std::vector<BenchRow> rows;
  for (std::size_t id = 0; id < cfg.pairs; ++id) {
    auto x = random_expr(rng, rc);
    auto y = random_expr(rng, rc);
    if (cfg.saturate) {
      x = saturate(x, cfg.letters);
      y = saturate(y, cfg.letters);
    }
    std::size_t antimirov_states = 0;
    for (Construction c : {Construction::Ant, Construction::Iy, Construction::Brz}) {
      for (Algorithm a : {Algorithm::Symb, Algorithm::Dsf}) {
        CheckConfig cc;
        cc.construction = c;
        cc.algorithm = a;
        if (c == Construction::Brz)
          cc.state_cap = std::max<std::size_t>(cfg.brz_cap_factor * antimirov_states, 100);
        BenchRow row{c, a, id, "", {}, 0, 0, ""};
        const auto start = std::chrono::steady_clock::now();
        try {
          auto r = check(sig, x, y, cc);
          row.verdict = r.holds ? "equiv" : "differ";
          row.stats = r.stats;
          row.states = r.states;
          row.millis = r.millis;
          if (c == Construction::Ant) antimirov_states = std::max(antimirov_states, r.states);
        } catch (const construct::StateCapExceeded& e) {
          row.verdict = "cap";
          row.diagnostic = e.what();
          row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "method,algo,pair_id,verdict,output_tests,pairs_pushed,millis\n";
  for (const auto& r : rows)
    out << name(r.construction) << ',' << name(r.algorithm) << ',' << r.pair_id << ',' << r.verdict
        << ',' << r.stats.output_tests << ',' << r.stats.pairs_pushed << ',' << std::fixed
        << std::setprecision(3) << r.millis << '\n';
}

void write_summary(std::ostream& out, const std::vector<BenchRow>& rows, const BenchConfig& cfg) {
  struct Cell {
    std::size_t tests = 0;
    double millis = 0;
    std::size_t equiv = 0;
    std::size_t capped = 0;
  };
  std::map<std::pair<int, int>, Cell> cells;
  for (const auto& r : rows) {
    auto& c = cells[{static_cast<int>(r.construction), static_cast<int>(r.algorithm)}];
    c.tests += r.stats.output_tests;
    c.millis += r.millis;
    c.equiv += r.verdict == "equiv";
    c.capped += r.verdict == "cap";
  }
  out << cfg.pairs << " pairs, " << cfg.tests << " tests, " << cfg.letters << " letters, "
      << cfg.connectives << " connectives, seed " << cfg.seed
      << (cfg.saturate ? ", saturated" : "") << "\n";
  out << std::left << std::setw(8) << "method" << std::setw(8) << "algo" << std::right
      << std::setw(12) << "time (s)" << std::setw(14) << "output tests" << std::setw(8) << "equiv"
      << std::setw(8) << "capped" << '\n';
  for (Construction c : {Construction::Brz, Construction::Ant, Construction::Iy})
    for (Algorithm a : {Algorithm::Symb, Algorithm::Dsf}) {
      const auto& cell = cells[{static_cast<int>(c), static_cast<int>(a)}];
      out << std::left << std::setw(8) << name(c) << std::setw(8) << name(a) << std::right
          << std::setw(12) << std::fixed << std::setprecision(3) << cell.millis / 1000.0
          << std::setw(14) << cell.tests << std::setw(8) << cell.equiv << std::setw(8)
          << cell.capped << '\n';
    }
}

}  // namespace symkat::cli
