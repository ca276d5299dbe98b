#pragma once

// Symbolic KAT expressions: tests compiled to Boolean BDDs over A, letters
// encoded as bit vectors over Sigma'. The variable universe is A followed by
// Sigma' (most significant code bit first).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symkat/bdd/boolean.hpp"
#include "symkat/kat/regex_store.hpp"
#include "symkat/kat/syntax.hpp"

namespace symkat::kat {

class LetterCode {
 public:
  LetterCode(std::size_t num_tests, std::size_t num_letters);

  std::size_t num_tests() const { return num_tests_; }
  std::size_t num_letters() const { return num_letters_; }
  std::size_t bits() const { return bits_; }
  std::size_t num_vars() const { return num_tests_ + bits_; }
  bdd::Var bit_var(std::size_t k) const { return static_cast<bdd::Var>(num_tests_ + k); }
  bool is_letter_var(bdd::Var v) const { return v >= num_tests_; }

  /// Value of code bit k (0 = most significant) for letter p.
  bool bit(std::uint32_t p, std::size_t k) const { return ((p >> (bits_ - 1 - k)) & 1U) != 0; }

  /// The letter encoded by an assignment, if the code is in use.
  std::optional<std::uint32_t> decode(const bdd::Assignment& a) const;
  /// Writes the code of p into the Sigma' part of `a`.
  void encode(std::uint32_t p, bdd::Assignment& a) const;

  /// <code(p) -> hit, _ -> miss>
  template <class M>
  typename M::node_type letter_bdd(M& m, std::uint32_t p, const typename M::value_type& hit,
                                   const typename M::value_type& miss) const {
    auto yes = m.constant(hit);
    auto no = m.constant(miss);
    auto acc = yes;
    for (std::size_t k = bits_; k-- > 0;)
      acc = bit(p, k) ? m.node(bit_var(k), no, acc) : m.node(bit_var(k), acc, no);
    return acc;
  }

 private:
  std::size_t num_tests_;
  std::size_t num_letters_;
  std::size_t bits_;
};

/// Tests as Boolean BDD nodes; sums and products of tests are merged.
struct BddTests {
  using Test = bdd::BoolNode;

  bdd::BoolManager* m;

  Test zero() const { return m->constant(false); }
  Test one() const { return m->constant(true); }
  bool is_zero(Test t) const { return t == m->constant(false); }
  bool is_one(Test t) const { return t == m->constant(true); }
  std::size_t hash(Test t) const { return t.id; }
  bool equal(Test a, Test b) const { return a == b; }
  std::optional<Test> join(Test a, Test b) const { return bdd::dsj(*m, a, b); }
  std::optional<Test> meet(Test a, Test b) const { return bdd::cnj(*m, a, b); }
};

using SymbolicStore = RegexStore<BddTests>;

/// A signature together with its test manager and interned symbolic expressions.
class Workspace {
 public:
  explicit Workspace(Signature sig);

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const Signature& signature() const { return sig_; }
  const LetterCode& code() const { return code_; }
  bdd::BoolManager& tests() { return *tests_; }
  SymbolicStore& exprs() { return exprs_; }

  bdd::BoolNode compile_test(const Test& t);
  ExprId compile(const Expr& e);

  /// Re-parseable rendering; tests print as sums of cubes.
  std::string to_string(ExprId x);
  std::string test_string(bdd::BoolNode t);
  /// Test names for A, and `#k` for code bit k.
  std::string var_name(bdd::Var v) const;

 private:
  std::string render(ExprId x, int context);

  Signature sig_;
  LetterCode code_;
  std::unique_ptr<bdd::BoolManager> tests_;
  SymbolicStore exprs_;
};

}  // namespace symkat::kat
