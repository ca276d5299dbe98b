#pragma once

// Symbolic Brzozowski derivatives and Antimirov partial derivatives of
// symbolic KAT expressions, and the automata they induce.
//
//   eps^(p) = 0        eps^(phi) = phi      eps^(x*) = 1
//   eps^(x+y) = eps^x | eps^y               eps^(xy) = eps^x & eps^y
//
//   delta^(p) = <p -> 1, _ -> 0>            delta^(phi) = 0
//   delta^(x+y) = delta^x +^ delta^y
//   delta^(xy)  = (delta^x .^ y) +^ (eps^x x^ delta^y)
//   delta^(x*)  = delta^x .^ x*
//
// The partial derivatives delta' follow the same clauses with sets of
// expressions at the leaves.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "symkat/automata/set_store.hpp"
#include "symkat/automata/symbolic.hpp"
#include "symkat/bdd/boolean.hpp"
#include "symkat/kat/symbolic.hpp"

namespace symkat::construct {

using kat::ExprId;
using automata::SetId;

class StateCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Derivatives {
 public:
  explicit Derivatives(kat::Workspace& ws);

  Derivatives(const Derivatives&) = delete;
  Derivatives& operator=(const Derivatives&) = delete;

  kat::Workspace& workspace() { return ws_; }
  bdd::Manager<ExprId>& expr_bdds() { return expr_bdds_; }
  automata::SetStore<ExprId>& sets() { return sets_; }
  bdd::Manager<SetId>& set_bdds() { return set_bdds_; }

  bdd::BoolNode eps(ExprId x);
  bdd::Node<ExprId> delta(ExprId x);
  bdd::Node<SetId> delta_set(ExprId x);

  /// Pointwise syntactic sum.
  bdd::Node<ExprId> plus(bdd::Node<ExprId> a, bdd::Node<ExprId> b);
  /// Right-multiplies every leaf by y.
  bdd::Node<ExprId> rmul(bdd::Node<ExprId> n, ExprId y);
  bdd::Node<SetId> rmul_set(bdd::Node<SetId> n, ExprId y);
  bdd::Node<SetId> cup(bdd::Node<SetId> a, bdd::Node<SetId> b);

 private:
  kat::Workspace& ws_;
  bdd::Manager<ExprId> expr_bdds_;
  automata::SetStore<ExprId> sets_;
  bdd::Manager<SetId> set_bdds_;
  std::unordered_map<std::uint32_t, bdd::BoolNode> eps_memo_;
  std::unordered_map<std::uint32_t, bdd::Node<ExprId>> delta_memo_;
  std::unordered_map<std::uint32_t, bdd::Node<SetId>> delta_set_memo_;
};

/// <SKAT, delta^, eps^>, explored lazily.
class BrzozowskiDfa {
 public:
  using State = ExprId;
  using Output = bdd::BoolNode;
  using Store = bdd::Manager<ExprId>;

  explicit BrzozowskiDfa(Derivatives& d, std::size_t state_cap = 100000)
      : d_(d), cap_(state_cap) {}

  Store& store() { return d_.expr_bdds(); }
  bdd::Node<ExprId> transitions(ExprId x);
  bdd::BoolNode output(ExprId x) { return d_.eps(x); }
  std::size_t explored() const { return seen_.size(); }

 private:
  Derivatives& d_;
  std::size_t cap_;
  std::unordered_set<std::uint32_t> seen_;
};

/// <SKAT, delta', eps^> as a symbolic NFA; outputs join by disjunction.
class AntimirovNfa {
 public:
  using State = ExprId;
  using Output = bdd::BoolNode;

  explicit AntimirovNfa(Derivatives& d, std::size_t state_cap = 100000)
      : d_(d), cap_(state_cap) {}

  automata::SetStore<ExprId>& sets() { return d_.sets(); }
  bdd::Manager<SetId>& store() { return d_.set_bdds(); }
  bdd::Node<SetId> transitions(ExprId x);
  bdd::BoolNode output(ExprId x) { return d_.eps(x); }
  bdd::BoolNode join(bdd::BoolNode a, bdd::BoolNode b) {
    return bdd::dsj(d_.workspace().tests(), a, b);
  }
  bdd::BoolNode output_unit() { return bdd::bottom(d_.workspace().tests()); }
  std::size_t explored() const { return seen_.size(); }

 private:
  Derivatives& d_;
  std::size_t cap_;
  std::unordered_set<std::uint32_t> seen_;
};

}  // namespace symkat::construct
