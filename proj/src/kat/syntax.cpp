#include "symkat/kat/syntax.hpp"

#include <algorithm>

namespace symkat::kat {

namespace {

std::optional<std::uint32_t> find_name(const std::vector<std::string>& names,
                                       std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

Test make_test(TestExpr::Kind k, std::uint32_t v = 0, Test l = nullptr, Test r = nullptr) {
  return std::make_shared<const TestExpr>(TestExpr{k, v, std::move(l), std::move(r)});
}

Expr make_expr(KatExpr::Kind k, Test t = nullptr, std::uint32_t p = 0, Expr l = nullptr,
               Expr r = nullptr) {
  return std::make_shared<const KatExpr>(KatExpr{k, std::move(t), p, std::move(l), std::move(r)});
}

// Precedence levels shared by tests and expressions: 0 sum/or, 1 product/and,
// 2 star, 3 negation and primaries.
std::string render_test(const TestExpr& t, const Signature& sig, int context) {
  using K = TestExpr::Kind;
  std::string s;
  int level = 3;
  switch (t.kind) {
    case K::Var: s = sig.tests.at(t.var); break;
    case K::True: s = "1"; break;
    case K::False: s = "0"; break;
    case K::And:
      level = 1;
      s = render_test(*t.lhs, sig, 1) + "&" + render_test(*t.rhs, sig, 2);
      break;
    case K::Or:
      level = 0;
      s = render_test(*t.lhs, sig, 0) + "|" + render_test(*t.rhs, sig, 1);
      break;
    case K::Not: s = "!" + render_test(*t.lhs, sig, 3); break;
  }
  return level < context ? "(" + s + ")" : s;
}

std::string render_expr(const KatExpr& e, const Signature& sig, int context) {
  using K = KatExpr::Kind;
  std::string s;
  int level = 3;
  switch (e.kind) {
    case K::Test: return render_test(*e.test, sig, context);
    case K::Letter: s = sig.letters.at(e.letter); break;
    case K::Sum:
      level = 0;
      s = render_expr(*e.lhs, sig, 0) + " + " + render_expr(*e.rhs, sig, 1);
      break;
    case K::Prod:
      level = 1;
      s = render_expr(*e.lhs, sig, 1) + ";" + render_expr(*e.rhs, sig, 2);
      break;
    case K::Star:
      level = 2;
      s = render_expr(*e.lhs, sig, 3) + "*";
      break;
  }
  return level < context ? "(" + s + ")" : s;
}

}  // namespace

std::optional<std::uint32_t> Signature::test_index(std::string_view name) const {
  return find_name(tests, name);
}

std::optional<std::uint32_t> Signature::letter_index(std::string_view name) const {
  return find_name(letters, name);
}

Test test_var(std::uint32_t v) { return make_test(TestExpr::Kind::Var, v); }
Test test_true() { return make_test(TestExpr::Kind::True); }
Test test_false() { return make_test(TestExpr::Kind::False); }
Test test_and(Test a, Test b) { return make_test(TestExpr::Kind::And, 0, std::move(a), std::move(b)); }
Test test_or(Test a, Test b) { return make_test(TestExpr::Kind::Or, 0, std::move(a), std::move(b)); }
Test test_not(Test a) { return make_test(TestExpr::Kind::Not, 0, std::move(a)); }

bool atom_sat(Atom alpha, const TestExpr& phi) {
  using K = TestExpr::Kind;
  switch (phi.kind) {
    case K::Var: return ((alpha >> phi.var) & 1U) != 0;
    case K::True: return true;
    case K::False: return false;
    case K::And: return atom_sat(alpha, *phi.lhs) && atom_sat(alpha, *phi.rhs);
    case K::Or: return atom_sat(alpha, *phi.lhs) || atom_sat(alpha, *phi.rhs);
    case K::Not: return !atom_sat(alpha, *phi.lhs);
  }
  return false;
}

Expr expr_test(Test t) { return make_expr(KatExpr::Kind::Test, std::move(t)); }
Expr expr_letter(std::uint32_t p) { return make_expr(KatExpr::Kind::Letter, nullptr, p); }
Expr expr_sum(Expr a, Expr b) {
  return make_expr(KatExpr::Kind::Sum, nullptr, 0, std::move(a), std::move(b));
}
Expr expr_prod(Expr a, Expr b) {
  return make_expr(KatExpr::Kind::Prod, nullptr, 0, std::move(a), std::move(b));
}
Expr expr_star(Expr a) { return make_expr(KatExpr::Kind::Star, nullptr, 0, std::move(a)); }
Expr expr_zero() { return expr_test(test_false()); }
Expr expr_one() { return expr_test(test_true()); }

std::optional<Test> as_test(const Expr& e) {
  using K = KatExpr::Kind;
  switch (e->kind) {
    case K::Test: return e->test;
    case K::Sum:
    case K::Prod: {
      auto l = as_test(e->lhs);
      auto r = as_test(e->rhs);
      if (!l || !r) return std::nullopt;
      return e->kind == K::Sum ? test_or(*l, *r) : test_and(*l, *r);
    }
    default: return std::nullopt;
  }
}

std::size_t connectives(const Expr& e) {
  using K = KatExpr::Kind;
  switch (e->kind) {
    case K::Test:
    case K::Letter: return 0;
    case K::Star: return 1 + connectives(e->lhs);
    default: return 1 + connectives(e->lhs) + connectives(e->rhs);
  }
}

namespace {
bool test_equal(const TestExpr& a, const TestExpr& b) {
  if (a.kind != b.kind || a.var != b.var) return false;
  if (a.lhs && !test_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !test_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

bool test_has_zero(const TestExpr& t) {
  if (t.kind == TestExpr::Kind::False) return true;
  return (t.lhs && test_has_zero(*t.lhs)) || (t.rhs && test_has_zero(*t.rhs));
}
}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind || a->letter != b->letter) return false;
  if (a->test && !test_equal(*a->test, *b->test)) return false;
  if (a->lhs && !structurally_equal(a->lhs, b->lhs)) return false;
  if (a->rhs && !structurally_equal(a->rhs, b->rhs)) return false;
  return true;
}

bool contains_zero(const Expr& e) {
  if (e->test && test_has_zero(*e->test)) return true;
  return (e->lhs && contains_zero(e->lhs)) || (e->rhs && contains_zero(e->rhs));
}

std::string to_string(const Test& t, const Signature& sig) { return render_test(*t, sig, 0); }
std::string to_string(const Expr& e, const Signature& sig) { return render_expr(*e, sig, 0); }

}  // namespace symkat::kat
