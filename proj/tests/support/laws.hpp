#pragma once

// The eight KAT (in)equations, with x, y as letters p, q and phi, psi as
// tests a, b.

#include <array>

#include "symkat/cli/check.hpp"

namespace fixtures {

struct Law {
  const char* name;
  const char* lhs;
  const char* rhs;
  symkat::cli::Mode mode;
};

inline constexpr std::array<Law, 8> kLaws{{
    {"excluded middle", "a + !a", "1", symkat::cli::Mode::Equiv},
    {"guarded sum", "a;(!a + b)", "a;b", symkat::cli::Mode::Equiv},
    {"de Morgan", "a;b", "!(!a + !b)", symkat::cli::Mode::Equiv},
    {"star square", "p*;p*", "p*", symkat::cli::Mode::Equiv},
    {"denesting", "(p + q)*", "p*;(q;p*)*", symkat::cli::Mode::Equiv},
    {"star growth", "(p + p;p;q)*", "(p + p;q)*", symkat::cli::Mode::Incl},
    {"guarded loop", "a;(!a;p)*", "a", symkat::cli::Mode::Equiv},
    {"alternation", "a;(a;p;!a + !a;q;a)*;a", "(p;q)*", symkat::cli::Mode::Incl},
}};

}  // namespace fixtures
