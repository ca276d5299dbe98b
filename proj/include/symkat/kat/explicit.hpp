#pragma once

// Explicit per-atom derivatives:
//   eps_a(p) = 0            delta_ap(q)   = [p = q]
//   eps_a(phi) = [a |= phi] delta_ap(phi) = 0
//   eps_a(x+y) = eps_a(x) | eps_a(y)
//   eps_a(xy)  = eps_a(x) & eps_a(y)
//   eps_a(x*)  = 1
//   delta_ap(x+y) = delta_ap(x) + delta_ap(y)
//   delta_ap(xy)  = delta_ap(x) y + (eps_a(x) ? delta_ap(y) : 0)
//   delta_ap(x*)  = delta_ap(x) x*
// Tests stay syntactic (hash-consed trees); nothing is merged.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symkat/bdd/manager.hpp"
#include "symkat/equiv/word.hpp"
#include "symkat/kat/regex_store.hpp"
#include "symkat/kat/symbolic.hpp"
#include "symkat/kat/syntax.hpp"

namespace symkat::kat {

class TestTable {
 public:
  using Id = std::uint32_t;

  TestTable();

  Id intern(const Test& t);
  Id falsum() const { return 0; }
  Id verum() const { return 1; }
  bool sat(Atom alpha, Id t) const;
  std::size_t size() const { return entries_.size(); }
  /// A tree denoting t.
  Test tree(Id t) const;

 private:
  struct Entry {
    TestExpr::Kind kind;
    std::uint32_t var;
    Id lhs, rhs;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct EntryHash {
    std::size_t operator()(const Entry& e) const;
  };
  Id make(Entry e);

  std::vector<Entry> entries_;
  std::unordered_map<Entry, Id, EntryHash> index_;
};

struct ExplicitTests {
  using Test = TestTable::Id;

  Test zero() const { return 0; }
  Test one() const { return 1; }
  bool is_zero(Test t) const { return t == 0; }
  bool is_one(Test t) const { return t == 1; }
  std::size_t hash(Test t) const { return t; }
  bool equal(Test a, Test b) const { return a == b; }
  std::optional<Test> join(Test, Test) const { return std::nullopt; }
  std::optional<Test> meet(Test, Test) const { return std::nullopt; }
};

using ExplicitStore = RegexStore<ExplicitTests>;

class ExplicitKat {
 public:
  explicit ExplicitKat(const Signature& sig);

  ExprId compile(const Expr& e);
  /// Back to a syntax tree, e.g. to render a derivative.
  Expr to_expr(ExprId x) const;
  ExplicitStore& exprs() { return exprs_; }
  const Signature& signature() const { return sig_; }
  std::size_t num_atoms() const { return std::size_t{1} << sig_.num_tests(); }

  bool eps(Atom alpha, ExprId x);
  ExprId delta(Atom alpha, std::uint32_t p, ExprId x);
  /// Bit alpha holds eps_alpha(x).
  std::uint64_t eps_mask(ExprId x);

 private:
  Signature sig_;
  TestTable tests_;
  ExplicitStore exprs_;
  std::unordered_map<std::uint64_t, ExprId> delta_memo_;
  std::unordered_map<std::uint32_t, std::uint64_t> eps_memo_;
};

/// The deterministic automaton of explicit derivatives over letters (alpha, p),
/// numbered alpha * |Sigma| + p. Outputs are atom masks.
class ExplicitDerivativeDfa {
 public:
  using State = ExprId;
  using Output = std::uint64_t;

  explicit ExplicitDerivativeDfa(ExplicitKat& kat)
      : kat_(kat), code_(kat.signature().num_tests(), kat.signature().num_letters()) {}

  std::size_t num_letters() const {
    return kat_.num_atoms() * kat_.signature().num_letters();
  }
  ExprId step(ExprId x, std::size_t a) {
    const std::size_t nl = kat_.signature().num_letters();
    return kat_.delta(a / nl, static_cast<std::uint32_t>(a % nl), x);
  }
  std::uint64_t output(ExprId x) { return kat_.eps_mask(x); }
  /// The letter as literals over A followed by the letter code bits.
  equiv::Letter letter(std::size_t a) const;

 private:
  ExplicitKat& kat_;
  LetterCode code_;
};

}  // namespace symkat::kat
