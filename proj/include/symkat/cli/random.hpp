#pragma once

#include <cstdint>
#include <random>

#include "symkat/kat/syntax.hpp"

namespace symkat::cli {

struct RandomConfig {
  std::size_t tests = 2;
  std::size_t letters = 2;
  std::size_t connectives = 10;
};

/// Signature with tests a, b, ... and letters p, q, ... (then t0, t1, ... /
/// l0, l1, ... when the short names run out).
kat::Signature make_signature(std::size_t tests, std::size_t letters);

/// An expression with exactly `connectives` operators among +, ; and *.
/// Leaves are letters or tests; a test leaf is a literal or a conjunction of
/// two literals on distinct tests. The constant 0 never occurs.
kat::Expr random_expr(std::mt19937_64& rng, const RandomConfig& cfg);

/// x + (p1 + ... + pk)*
kat::Expr saturate(const kat::Expr& x, std::size_t letters);

}  // namespace symkat::cli
