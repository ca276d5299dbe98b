#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "symkat/cli/check.hpp"

namespace symkat::cli {

struct BenchConfig {
  std::size_t tests = 7;
  std::size_t letters = 7;
  std::size_t connectives = 70;
  std::size_t pairs = 100;
  bool saturate = true;
  std::uint64_t seed = 1;
  /// Brzozowski runs stop at this multiple of the Antimirov state count.
  std::size_t brz_cap_factor = 10;
};

struct BenchRow {
  Construction construction;
  Algorithm algorithm;
  std::size_t pair_id;
  std::string verdict;  // equiv, differ, or cap
  equiv::Stats stats;
  std::size_t states = 0;
  double millis = 0;
  std::string diagnostic;
};

/// Runs every pair through the six (construction, symb|dsf) cells, each in a
/// fresh session.
std::vector<BenchRow> bench(const BenchConfig& cfg);

/// method,algo,pair_id,verdict,output_tests,pairs_pushed,millis
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
/// Per-cell totals laid out as constructions x algorithms.
void write_summary(std::ostream& out, const std::vector<BenchRow>& rows, const BenchConfig& cfg);

}  // namespace symkat::cli
