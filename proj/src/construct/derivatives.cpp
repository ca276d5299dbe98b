#include "symkat/construct/derivatives.hpp"

#include <string>
#include <vector>

namespace symkat::construct {

using kat::ExprKind;

Derivatives::Derivatives(kat::Workspace& ws)
    : ws_(ws), expr_bdds_(ws.tests().num_vars()), set_bdds_(ws.tests().num_vars()) {}

bdd::BoolNode Derivatives::eps(ExprId x) {
  if (auto it = eps_memo_.find(x.id); it != eps_memo_.end()) return it->second;
  auto& m = ws_.tests();
  const auto e = ws_.exprs().at(x);
  bdd::BoolNode r = bdd::bottom(m);
  switch (e.kind) {
    case ExprKind::Test: r = e.test; break;
    case ExprKind::Letter: break;
    case ExprKind::Sum:
      for (ExprId y : e.args) r = bdd::dsj(m, r, eps(y));
      break;
    case ExprKind::Prod: {
      bdd::BoolNode l = eps(e.args[0]);
      r = bdd::cnj(m, l, eps(e.args[1]));
      break;
    }
    case ExprKind::Star: r = bdd::top(m); break;
  }
  eps_memo_.emplace(x.id, r);
  return r;
}

bdd::Node<ExprId> Derivatives::plus(bdd::Node<ExprId> a, bdd::Node<ExprId> b) {
  auto& store = ws_.exprs();
  auto zero = expr_bdds_.constant(store.zero());
  auto shortcut = [&](bdd::Node<ExprId> x,
                      bdd::Node<ExprId> y) -> std::optional<bdd::Node<ExprId>> {
    if (x == y || y == zero) return x;
    if (x == zero) return y;
    return std::nullopt;
  };
  return bdd::apply(expr_bdds_, expr_bdds_.op("plus"), expr_bdds_, a, expr_bdds_, b,
                    [&](ExprId x, ExprId y) { return store.sum(x, y); }, shortcut);
}

bdd::Node<ExprId> Derivatives::rmul(bdd::Node<ExprId> n, ExprId y) {
  auto& store = ws_.exprs();
  return bdd::map_leaves(expr_bdds_, expr_bdds_.op("rmul", y.id), expr_bdds_, n,
                         [&](ExprId x) { return store.prod(x, y); });
}

bdd::Node<SetId> Derivatives::cup(bdd::Node<SetId> a, bdd::Node<SetId> b) {
  return automata::set_union(set_bdds_, sets_, a, b);
}

bdd::Node<SetId> Derivatives::rmul_set(bdd::Node<SetId> n, ExprId y) {
  auto& store = ws_.exprs();
  return bdd::map_leaves(set_bdds_, set_bdds_.op("rmulset", y.id), set_bdds_, n, [&](SetId s) {
    std::vector<ExprId> out;
    for (ExprId x : sets_.members(s)) {
      ExprId xy = store.prod(x, y);
      if (xy != store.zero()) out.push_back(xy);
    }
    return sets_.make(std::move(out));
  });
}

bdd::Node<ExprId> Derivatives::delta(ExprId x) {
  if (auto it = delta_memo_.find(x.id); it != delta_memo_.end()) return it->second;
  auto& store = ws_.exprs();
  const auto e = store.at(x);
  bdd::Node<ExprId> r = expr_bdds_.constant(store.zero());
  switch (e.kind) {
    case ExprKind::Test: break;
    case ExprKind::Letter:
      r = ws_.code().letter_bdd(expr_bdds_, e.letter, store.one(), store.zero());
      break;
    case ExprKind::Sum:
      for (ExprId y : e.args) r = plus(r, delta(y));
      break;
    case ExprKind::Prod: {
      auto left = rmul(delta(e.args[0]), e.args[1]);
      auto right = bdd::guard(expr_bdds_, ws_.tests(), eps(e.args[0]), delta(e.args[1]),
                              store.zero());
      r = plus(left, right);
      break;
    }
    case ExprKind::Star: r = rmul(delta(e.args[0]), x); break;
  }
  delta_memo_.emplace(x.id, r);
  return r;
}

bdd::Node<SetId> Derivatives::delta_set(ExprId x) {
  if (auto it = delta_set_memo_.find(x.id); it != delta_set_memo_.end()) return it->second;
  auto& store = ws_.exprs();
  const auto e = store.at(x);
  bdd::Node<SetId> r = set_bdds_.constant(sets_.empty());
  switch (e.kind) {
    case ExprKind::Test: break;
    case ExprKind::Letter:
      r = ws_.code().letter_bdd(set_bdds_, e.letter, sets_.singleton(store.one()), sets_.empty());
      break;
    case ExprKind::Sum:
      for (ExprId y : e.args) r = cup(r, delta_set(y));
      break;
    case ExprKind::Prod: {
      auto left = rmul_set(delta_set(e.args[0]), e.args[1]);
      auto right = bdd::guard(set_bdds_, ws_.tests(), eps(e.args[0]), delta_set(e.args[1]),
                              sets_.empty());
      r = cup(left, right);
      break;
    }
    case ExprKind::Star: r = rmul_set(delta_set(e.args[0]), x); break;
  }
  delta_set_memo_.emplace(x.id, r);
  return r;
}

bdd::Node<ExprId> BrzozowskiDfa::transitions(ExprId x) {
  if (seen_.insert(x.id).second && seen_.size() > cap_)
    throw StateCapExceeded("Brzozowski automaton exceeded " + std::to_string(cap_) +
                           " states; derivatives are not converging under normalisation");
  return d_.delta(x);
}

bdd::Node<SetId> AntimirovNfa::transitions(ExprId x) {
  if (seen_.insert(x.id).second && seen_.size() > cap_)
    throw StateCapExceeded("Antimirov automaton exceeded " + std::to_string(cap_) + " states");
  return d_.delta_set(x);
}

}  // namespace symkat::construct
