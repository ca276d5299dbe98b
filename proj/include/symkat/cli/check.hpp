#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "symkat/equiv/equiv.hpp"
#include "symkat/kat/symbolic.hpp"
#include "symkat/kat/syntax.hpp"

namespace symkat::cli {

enum class Construction { Brz, Ant, Iy };
enum class Algorithm { Naive, Symb, Dsf };
enum class Mode { Equiv, Incl };

Construction parse_construction(std::string_view s);
Algorithm parse_algorithm(std::string_view s);
Mode parse_mode(std::string_view s);
std::string_view name(Construction c);
std::string_view name(Algorithm a);
std::string_view name(Mode m);

struct CheckConfig {
  Construction construction = Construction::Ant;
  Algorithm algorithm = Algorithm::Symb;
  Mode mode = Mode::Equiv;
  std::size_t naive_cap = std::size_t{1} << 12;  // letters of 2^(A+Sigma')
  std::size_t state_cap = 100000;
  bool track_witness = true;
  /// Re-checks the final relation against every explicit letter.
  bool verify_certificate = false;
};

struct CheckResult {
  bool holds = true;
  equiv::SymbolicWord witness;
  std::string witness_text;
  equiv::Stats stats;
  std::size_t states = 0;  // automaton states whose transitions were computed
  double millis = 0;
  std::optional<bool> certificate;
};

/// Decides e1 == e2 (or e1 <= e2). Throws on cap violations.
CheckResult check(const kat::Signature& sig, const kat::Expr& e1, const kat::Expr& e2,
                  const CheckConfig& cfg);

/// Renders a witness with test literals and letters decoded from their code
/// bits, e.g. `[+a p];[-b {p,q}]`.
std::string describe_witness(const kat::Workspace& ws, const equiv::SymbolicWord& w);

}  // namespace symkat::cli
