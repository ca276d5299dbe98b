#pragma once

// KAT expressions as parsed: regular expressions over letters and Boolean
// tests. Trees are immutable and shared.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symkat::kat {

/// Declared primitive tests A and letters Sigma, each indexed from 0.
struct Signature {
  std::vector<std::string> tests;
  std::vector<std::string> letters;

  std::optional<std::uint32_t> test_index(std::string_view name) const;
  std::optional<std::uint32_t> letter_index(std::string_view name) const;
  std::size_t num_tests() const { return tests.size(); }
  std::size_t num_letters() const { return letters.size(); }
};

/// An atom: bit i holds the value of test i.
using Atom = std::uint64_t;

struct TestExpr;
using Test = std::shared_ptr<const TestExpr>;

struct TestExpr {
  enum class Kind { Var, True, False, And, Or, Not };
  Kind kind;
  std::uint32_t var = 0;
  Test lhs, rhs;
};

Test test_var(std::uint32_t v);
Test test_true();
Test test_false();
Test test_and(Test a, Test b);
Test test_or(Test a, Test b);
Test test_not(Test a);

/// alpha |= phi
bool atom_sat(Atom alpha, const TestExpr& phi);

struct KatExpr;
using Expr = std::shared_ptr<const KatExpr>;

struct KatExpr {
  enum class Kind { Test, Letter, Sum, Prod, Star };
  Kind kind;
  Test test;
  std::uint32_t letter = 0;
  Expr lhs, rhs;
};

Expr expr_test(Test t);
Expr expr_letter(std::uint32_t p);
Expr expr_sum(Expr a, Expr b);
Expr expr_prod(Expr a, Expr b);
Expr expr_star(Expr a);
Expr expr_zero();
Expr expr_one();

/// Reads a sum/product of tests back as a test (+ as or, . as and).
std::optional<Test> as_test(const Expr& e);

/// Number of +, . and * nodes.
std::size_t connectives(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);
bool contains_zero(const Expr& e);

std::string to_string(const Test& t, const Signature& sig);
/// Re-parseable rendering.
std::string to_string(const Expr& e, const Signature& sig);

}  // namespace symkat::kat
