#include "symkat/kat/explicit.hpp"

#include <stdexcept>

namespace symkat::kat {

std::size_t TestTable::EntryHash::operator()(const Entry& e) const {
  std::uint64_t h = static_cast<std::uint64_t>(e.kind) << 32 | e.var;
  h = bdd::detail::mix(h ^ (std::uint64_t{e.lhs} << 32 | e.rhs));
  return static_cast<std::size_t>(h);
}

TestTable::TestTable() {
  make({TestExpr::Kind::False, 0, 0, 0});
  make({TestExpr::Kind::True, 0, 0, 0});
}

TestTable::Id TestTable::make(Entry e) {
  if (auto it = index_.find(e); it != index_.end()) return it->second;
  Id id = static_cast<Id>(entries_.size());
  entries_.push_back(e);
  index_.emplace(e, id);
  return id;
}

TestTable::Id TestTable::intern(const Test& t) {
  using K = TestExpr::Kind;
  switch (t->kind) {
    case K::False: return falsum();
    case K::True: return verum();
    case K::Var: return make({K::Var, t->var, 0, 0});
    case K::Not: return make({K::Not, 0, intern(t->lhs), 0});
    case K::And:
    case K::Or: {
      Id l = intern(t->lhs);
      return make({t->kind, 0, l, intern(t->rhs)});
    }
  }
  throw std::logic_error("TestTable: bad kind");
}

bool TestTable::sat(Atom alpha, Id t) const {
  using K = TestExpr::Kind;
  const Entry& e = entries_.at(t);
  switch (e.kind) {
    case K::False: return false;
    case K::True: return true;
    case K::Var: return ((alpha >> e.var) & 1U) != 0;
    case K::Not: return !sat(alpha, e.lhs);
    case K::And: return sat(alpha, e.lhs) && sat(alpha, e.rhs);
    case K::Or: return sat(alpha, e.lhs) || sat(alpha, e.rhs);
  }
  return false;
}

Test TestTable::tree(Id t) const {
  using K = TestExpr::Kind;
  const Entry& e = entries_.at(t);
  switch (e.kind) {
    case K::False: return test_false();
    case K::True: return test_true();
    case K::Var: return test_var(e.var);
    case K::Not: return test_not(tree(e.lhs));
    case K::And: return test_and(tree(e.lhs), tree(e.rhs));
    case K::Or: return test_or(tree(e.lhs), tree(e.rhs));
  }
  throw std::logic_error("TestTable: bad kind");
}

ExplicitKat::ExplicitKat(const Signature& sig) : sig_(sig), exprs_(ExplicitTests{}) {
  if (sig_.num_tests() > 6) throw std::invalid_argument("explicit derivatives: too many tests");
}

ExprId ExplicitKat::compile(const Expr& e) {
  using K = KatExpr::Kind;
  switch (e->kind) {
    case K::Test: return exprs_.test(tests_.intern(e->test));
    case K::Letter: return exprs_.letter(e->letter);
    case K::Sum: return exprs_.sum(compile(e->lhs), compile(e->rhs));
    case K::Prod: {
      ExprId l = compile(e->lhs);
      return exprs_.prod(l, compile(e->rhs));
    }
    case K::Star: return exprs_.star(compile(e->lhs));
  }
  throw std::logic_error("ExplicitKat::compile: bad kind");
}

Expr ExplicitKat::to_expr(ExprId x) const {
  const auto& e = exprs_.at(x);
  switch (e.kind) {
    case ExprKind::Test: return expr_test(tests_.tree(e.test));
    case ExprKind::Letter: return expr_letter(e.letter);
    case ExprKind::Sum: {
      Expr acc = to_expr(e.args[0]);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = expr_sum(acc, to_expr(e.args[i]));
      return acc;
    }
    case ExprKind::Prod: return expr_prod(to_expr(e.args[0]), to_expr(e.args[1]));
    case ExprKind::Star: return expr_star(to_expr(e.args[0]));
  }
  throw std::logic_error("ExplicitKat::to_expr: bad kind");
}

bool ExplicitKat::eps(Atom alpha, ExprId x) { return ((eps_mask(x) >> alpha) & 1U) != 0; }

std::uint64_t ExplicitKat::eps_mask(ExprId x) {
  if (auto it = eps_memo_.find(x.id); it != eps_memo_.end()) return it->second;
  const auto& e = exprs_.at(x);
  const std::uint64_t all = num_atoms() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_atoms()) - 1;
  std::uint64_t mask = 0;
  switch (e.kind) {
    case ExprKind::Test:
      for (Atom a = 0; a < num_atoms(); ++a)
        if (tests_.sat(a, e.test)) mask |= std::uint64_t{1} << a;
      break;
    case ExprKind::Letter: break;
    case ExprKind::Sum:
      for (ExprId y : e.args) mask |= eps_mask(y);
      break;
    case ExprKind::Prod: {
      std::uint64_t l = eps_mask(e.args[0]);
      mask = l & eps_mask(e.args[1]);
      break;
    }
    case ExprKind::Star: mask = all; break;
  }
  eps_memo_.emplace(x.id, mask);
  return mask;
}

ExprId ExplicitKat::delta(Atom alpha, std::uint32_t p, ExprId x) {
  const std::uint64_t key =
      (std::uint64_t{x.id} << 24) ^ (std::uint64_t{alpha} << 8) ^ std::uint64_t{p};
  if (auto it = delta_memo_.find(key); it != delta_memo_.end()) return it->second;
  const auto e = exprs_.at(x);
  ExprId r = exprs_.zero();
  switch (e.kind) {
    case ExprKind::Test: break;
    case ExprKind::Letter: r = e.letter == p ? exprs_.one() : exprs_.zero(); break;
    case ExprKind::Sum: {
      std::vector<ExprId> parts;
      for (ExprId y : e.args) parts.push_back(delta(alpha, p, y));
      r = exprs_.sum(parts);
      break;
    }
    case ExprKind::Prod: {
      ExprId l = exprs_.prod(delta(alpha, p, e.args[0]), e.args[1]);
      ExprId rest = eps(alpha, e.args[0]) ? delta(alpha, p, e.args[1]) : exprs_.zero();
      r = exprs_.sum(l, rest);
      break;
    }
    case ExprKind::Star: r = exprs_.prod(delta(alpha, p, e.args[0]), x); break;
  }
  delta_memo_.emplace(key, r);
  return r;
}

equiv::Letter ExplicitDerivativeDfa::letter(std::size_t a) const {
  const std::size_t nl = kat_.signature().num_letters();
  Atom alpha = a / nl;
  auto p = static_cast<std::uint32_t>(a % nl);
  equiv::Letter out;
  for (bdd::Var v = 0; v < kat_.signature().num_tests(); ++v)
    out.push_back({v, ((alpha >> v) & 1U) != 0});
  for (std::size_t k = 0; k < code_.bits(); ++k) out.push_back({code_.bit_var(k), code_.bit(p, k)});
  return out;
}

}  // namespace symkat::kat
