#pragma once

#include <stdexcept>

#include "symkat/cli/check.hpp"
#include "symkat/kat/syntax.hpp"

namespace symkat::cli {

/// Raised when the two ground truths disagree.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Independent ground truth for small signatures (|A| <= 3, |Sigma| <= 2,
/// bound <= 4): the naive algorithm on explicit per-atom derivatives, checked
/// against the guarded-string languages with at most `bound` letters. A
/// counter-example within the bound must show up as a difference of bounded
/// languages, and an equivalence must leave them equal.
bool oracle_check(const kat::Signature& sig, const kat::Expr& e1, const kat::Expr& e2,
                  std::size_t bound, Mode mode = Mode::Equiv);

}  // namespace symkat::cli
