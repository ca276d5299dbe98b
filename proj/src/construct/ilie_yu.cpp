#include "symkat/construct/ilie_yu.hpp"

#include <algorithm>

namespace symkat::construct {

using kat::ExprKind;

namespace {

class StarNormaliser {
 public:
  explicit StarNormaliser(Derivatives& d) : d_(d), store_(d.workspace().exprs()) {}

  ExprId run(ExprId x) {
    if (auto it = memo_.find(x.id); it != memo_.end()) return it->second;
    const auto e = store_.at(x);
    ExprId r = x;
    switch (e.kind) {
      case ExprKind::Test:
      case ExprKind::Letter: break;
      case ExprKind::Sum: {
        std::vector<ExprId> parts;
        for (ExprId y : e.args) parts.push_back(run(y));
        r = store_.sum(parts);
        break;
      }
      case ExprKind::Prod: {
        ExprId head = run(e.args[0]);
        r = store_.prod(head, run(e.args[1]));
        break;
      }
      case ExprKind::Star: {
        ExprId body = circ(run(e.args[0]));
        if (accepts_all_atoms(body)) body = strict(body);
        r = store_.star(body);
        break;
      }
    }
    memo_.emplace(x.id, r);
    return r;
  }

 private:
  bool accepts_all_atoms(ExprId x) { return d_.eps(x) == bdd::top(d_.workspace().tests()); }

  ExprId circ(ExprId x) {
    const auto e = store_.at(x);
    switch (e.kind) {
      case ExprKind::Test: return store_.zero();
      case ExprKind::Letter: return x;
      case ExprKind::Sum: {
        std::vector<ExprId> parts;
        for (ExprId y : e.args) parts.push_back(circ(y));
        return store_.sum(parts);
      }
      case ExprKind::Prod:
        if (accepts_all_atoms(e.args[0]) && accepts_all_atoms(e.args[1])) {
          ExprId head = circ(e.args[0]);
          return store_.sum(head, circ(e.args[1]));
        }
        return x;
      case ExprKind::Star: return circ(e.args[0]);
    }
    return x;
  }

  ExprId strict(ExprId x) {
    const auto e = store_.at(x);
    switch (e.kind) {
      case ExprKind::Test: return store_.zero();
      case ExprKind::Letter: return x;
      case ExprKind::Sum: {
        std::vector<ExprId> parts;
        for (ExprId y : e.args) parts.push_back(strict(y));
        return store_.sum(parts);
      }
      case ExprKind::Prod: {
        ExprId left = store_.prod(strict(e.args[0]), e.args[1]);
        ExprId guard = store_.test(d_.eps(e.args[0]));
        ExprId right = store_.prod(guard, strict(e.args[1]));
        return store_.sum(left, right);
      }
      case ExprKind::Star: return store_.prod(strict(e.args[0]), x);
    }
    return x;
  }

  Derivatives& d_;
  kat::SymbolicStore& store_;
  std::unordered_map<std::uint32_t, ExprId> memo_;
};

}  // namespace

ExprId star_normalise(Derivatives& d, ExprId x) { return StarNormaliser(d).run(x); }

std::size_t EpsNfa::add_state(bdd::BoolNode zero) {
  for (auto& row : J) row.push_back(zero);
  for (auto& row : N) row.emplace_back();
  ++n;
  J.emplace_back(n, zero);
  N.emplace_back(n);
  u.push_back(false);
  v.push_back(false);
  return n - 1;
}

namespace {

void build(kat::Workspace& ws, EpsNfa& a, ExprId x, std::size_t i, std::size_t f) {
  auto& m = ws.tests();
  const auto e = ws.exprs().at(x);
  switch (e.kind) {
    case ExprKind::Test: a.J[i][f] = bdd::dsj(m, a.J[i][f], e.test); break;
    case ExprKind::Letter: {
      auto& cell = a.N[i][f];
      if (std::find(cell.begin(), cell.end(), e.letter) == cell.end()) cell.push_back(e.letter);
      break;
    }
    case ExprKind::Sum:
      for (ExprId y : e.args) build(ws, a, y, i, f);
      break;
    case ExprKind::Prod: {
      std::size_t p = a.add_state(bdd::bottom(m));
      build(ws, a, e.args[0], i, p);
      build(ws, a, e.args[1], p, f);
      break;
    }
    case ExprKind::Star: {
      std::size_t p = a.add_state(bdd::bottom(m));
      a.J[i][p] = bdd::top(m);
      build(ws, a, e.args[0], p, p);
      a.J[p][f] = bdd::top(m);
      break;
    }
  }
}

}  // namespace

EpsNfa ilie_yu(kat::Workspace& ws, ExprId x) {
  EpsNfa a;
  auto zero = bdd::bottom(ws.tests());
  std::size_t i = a.add_state(zero);
  std::size_t f = a.add_state(zero);
  a.u[i] = true;
  a.v[f] = true;
  build(ws, a, x, i, f);
  return a;
}

EpsNfa disjoint_union(const EpsNfa& a, const EpsNfa& b, bdd::BoolNode zero) {
  EpsNfa c;
  for (std::size_t k = 0; k < a.n + b.n; ++k) c.add_state(zero);
  for (std::size_t i = 0; i < a.n; ++i) {
    c.u[i] = a.u[i];
    c.v[i] = a.v[i];
    for (std::size_t j = 0; j < a.n; ++j) {
      c.J[i][j] = a.J[i][j];
      c.N[i][j] = a.N[i][j];
    }
  }
  for (std::size_t i = 0; i < b.n; ++i) {
    c.u[a.n + i] = b.u[i];
    c.v[a.n + i] = b.v[i];
    for (std::size_t j = 0; j < b.n; ++j) {
      c.J[a.n + i][a.n + j] = b.J[i][j];
      c.N[a.n + i][a.n + j] = b.N[i][j];
    }
  }
  return c;
}

std::vector<std::vector<bdd::BoolNode>> test_closure(bdd::BoolManager& m,
                                                     const std::vector<std::vector<bdd::BoolNode>>& J) {
  auto star = J;
  const std::size_t n = J.size();
  const auto zero = bdd::bottom(m);
  for (std::size_t i = 0; i < n; ++i) star[i][i] = bdd::top(m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (star[i][k] == zero || i == k) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (star[k][j] != zero) star[i][j] = bdd::dsj(m, star[i][j], bdd::cnj(m, star[i][k], star[k][j]));
    }
  return star;
}

EliminatedNfa::EliminatedNfa(kat::Workspace& ws, EpsNfa nfa)
    : ws_(ws),
      nfa_(std::move(nfa)),
      star_(test_closure(ws.tests(), nfa_.J)),
      store_(ws.tests().num_vars()),
      letters_(nfa_.n),
      rows_(nfa_.n) {
  auto& m = ws_.tests();
  for (std::size_t i = 0; i < nfa_.n; ++i) {
    auto o = bdd::bottom(m);
    for (std::size_t j = 0; j < nfa_.n; ++j)
      if (nfa_.v[j]) o = bdd::dsj(m, o, star_[i][j]);
    outputs_.push_back(o);
  }
}

std::vector<EliminatedNfa::State> EliminatedNfa::initial() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < nfa_.n; ++i)
    if (nfa_.u[i]) out.push_back(static_cast<State>(i));
  return out;
}

bdd::Node<SetId> EliminatedNfa::transitions(State i) {
  if (rows_.at(i)) return *rows_[i];
  auto none = store_.constant(sets_.empty());
  auto zero = bdd::bottom(ws_.tests());
  auto row = none;
  for (std::size_t k = 0; k < nfa_.n; ++k) {
    if (star_[i][k] == zero) continue;
    if (!letters_[k]) {
      auto acc = none;
      for (std::size_t j = 0; j < nfa_.n; ++j)
        for (std::uint32_t p : nfa_.N[k][j])
          acc = automata::set_union(
              store_, sets_, acc,
              ws_.code().letter_bdd(store_, p, sets_.singleton(static_cast<State>(j)), sets_.empty()));
      letters_[k] = acc;
    }
    if (*letters_[k] == none) continue;
    auto guarded = bdd::guard(store_, ws_.tests(), star_[i][k], *letters_[k], sets_.empty());
    row = automata::set_union(store_, sets_, row, guarded);
  }
  rows_[i] = row;
  return row;
}

}  // namespace symkat::construct
