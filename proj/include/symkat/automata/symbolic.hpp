#pragma once

// Symbolic automata over the alphabet 2^Vars: the transition function of a
// state is a BDD whose leaves are states (DFA) or interned state sets (NFA).

#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "symkat/automata/set_store.hpp"
#include "symkat/bdd/manager.hpp"

namespace symkat::automata {

template <class D>
concept SymbolicDfa = requires(D& d, typename D::State s) {
  typename D::State;
  typename D::Output;
  typename D::Store;
  { d.store() } -> std::same_as<typename D::Store&>;
  { d.transitions(s) } -> std::same_as<bdd::Node<typename D::State>>;
  { d.output(s) } -> std::convertible_to<typename D::Output>;
};

template <class N>
concept SymbolicNfa = requires(N& n, typename N::State s, typename N::Output o) {
  typename N::State;
  typename N::Output;
  { n.sets() } -> std::same_as<SetStore<typename N::State>&>;
  { n.store() } -> std::same_as<bdd::Manager<SetId>&>;
  { n.transitions(s) } -> std::same_as<bdd::Node<SetId>>;
  { n.output(s) } -> std::convertible_to<typename N::Output>;
  { n.join(o, o) } -> std::convertible_to<typename N::Output>;
  { n.output_unit() } -> std::convertible_to<typename N::Output>;
};

/// Pointwise union of two set-valued BDDs.
template <class T>
bdd::Node<SetId> set_union(bdd::Manager<SetId>& m, SetStore<T>& sets, bdd::Node<SetId> x,
                           bdd::Node<SetId> y) {
  auto none = m.constant(sets.empty());
  auto shortcut = [&](bdd::Node<SetId> a, bdd::Node<SetId> b) -> std::optional<bdd::Node<SetId>> {
    if (a == b || b == none) return a;
    if (a == none) return b;
    return std::nullopt;
  };
  return bdd::apply(m, m.op("cup"), m, x, m, y,
                    [&](SetId a, SetId b) { return sets.unite(a, b); }, shortcut);
}

/// Explicitly tabulated symbolic DFA; states are 0..n-1.
template <class Out>
class TableDfa {
 public:
  using State = std::uint32_t;
  using Output = Out;
  using Store = bdd::Manager<State>;

  explicit TableDfa(std::size_t num_vars) : store_(num_vars) {}

  State add_state(Out out) {
    outputs_.push_back(std::move(out));
    transitions_.push_back(store_.constant(static_cast<State>(outputs_.size() - 1)));
    return static_cast<State>(outputs_.size() - 1);
  }
  void set_transitions(State s, bdd::Node<State> n) { transitions_.at(s) = n; }

  Store& store() { return store_; }
  bdd::Node<State> transitions(State s) { return transitions_.at(s); }
  Out output(State s) const { return outputs_.at(s); }
  std::size_t num_states() const { return outputs_.size(); }

 private:
  Store store_;
  std::vector<Out> outputs_;
  std::vector<bdd::Node<State>> transitions_;
};

/// Explicitly tabulated symbolic NFA; states are 0..n-1.
template <class Out, class Join = std::logical_or<>>
class TableNfa {
 public:
  using State = std::uint32_t;
  using Output = Out;

  TableNfa(std::size_t num_vars, Out unit) : store_(num_vars), unit_(std::move(unit)) {}

  State add_state(Out out) {
    outputs_.push_back(std::move(out));
    transitions_.push_back(store_.constant(sets_.empty()));
    return static_cast<State>(outputs_.size() - 1);
  }
  void set_transitions(State s, bdd::Node<SetId> n) { transitions_.at(s) = n; }

  SetStore<State>& sets() { return sets_; }
  bdd::Manager<SetId>& store() { return store_; }
  bdd::Node<SetId> transitions(State s) { return transitions_.at(s); }
  Out output(State s) const { return outputs_.at(s); }
  Out join(const Out& a, const Out& b) const { return Join{}(a, b); }
  Out output_unit() const { return unit_; }
  std::size_t num_states() const { return outputs_.size(); }

 private:
  SetStore<State> sets_;
  bdd::Manager<SetId> store_;
  Out unit_;
  std::vector<Out> outputs_;
  std::vector<bdd::Node<SetId>> transitions_;
};

/// On-the-fly powerset construction: a DFA view whose states are state sets.
template <SymbolicNfa N>
class Determinised {
 public:
  using State = SetId;
  using Output = typename N::Output;
  using Store = bdd::Manager<SetId>;

  explicit Determinised(N& nfa) : nfa_(nfa) {}

  Store& store() { return nfa_.store(); }
  N& nfa() { return nfa_; }

  SetId start(std::vector<typename N::State> states) { return nfa_.sets().make(std::move(states)); }

  bdd::Node<SetId> transitions(SetId s) {
    if (auto it = delta_.find(s); it != delta_.end()) return it->second;
    auto acc = nfa_.store().constant(nfa_.sets().empty());
    for (const auto& x : nfa_.sets().members(s))
      acc = set_union(nfa_.store(), nfa_.sets(), acc, nfa_.transitions(x));
    delta_.emplace(s, acc);
    return acc;
  }

  Output output(SetId s) {
    if (auto it = out_.find(s); it != out_.end()) return it->second;
    Output acc = nfa_.output_unit();
    for (const auto& x : nfa_.sets().members(s)) acc = nfa_.join(acc, nfa_.output(x));
    out_.emplace(s, acc);
    return acc;
  }

  /// Number of state sets whose transitions have been computed.
  std::size_t explored() const { return delta_.size(); }

 private:
  N& nfa_;
  std::unordered_map<SetId, bdd::Node<SetId>> delta_;
  std::unordered_map<SetId, Output> out_;
};

/// Word over 2^Vars, one bitmask per letter (bit i = variable i).
using MaskWord = std::vector<std::uint64_t>;

/// Bounded language of state x: every word of length <= k mapped to its output.
/// Enumerates the alphabet explicitly; test-oracle use only.
template <SymbolicDfa D>
std::map<MaskWord, typename D::Output> dfa_language_upto(D& dfa, typename D::State x,
                                                         std::size_t k) {
  const std::size_t vars = dfa.store().num_vars();
  if (vars > 16) throw std::invalid_argument("dfa_language_upto: alphabet too large");
  const std::uint64_t letters = std::uint64_t{1} << vars;
  std::map<MaskWord, typename D::Output> table;
  std::vector<std::pair<MaskWord, typename D::State>> frontier{{{}, x}};
  for (std::size_t len = 0;; ++len) {
    std::vector<std::pair<MaskWord, typename D::State>> next;
    for (auto& [w, s] : frontier) {
      table.emplace(w, dfa.output(s));
      if (len == k) continue;
      auto t = dfa.transitions(s);
      for (std::uint64_t a = 0; a < letters; ++a) {
        auto w2 = w;
        w2.push_back(a);
        next.emplace_back(std::move(w2), dfa.store().eval(t, bdd::Assignment::from_mask(a, vars)));
      }
    }
    if (len == k) break;
    frontier = std::move(next);
  }
  return table;
}

/// DOT rendering of the fragment reachable from `start`: one root arrow per
/// state into the shared transition BDD.
template <SymbolicDfa D, class StateLabel, class VarLabel>
std::string reachable_dot(D& dfa, typename D::State start, StateLabel&& state_label,
                          VarLabel&& var_label, std::size_t limit = 1000) {
  using S = typename D::State;
  std::vector<S> order;
  std::unordered_set<S> seen{start};
  std::deque<S> queue{start};
  std::vector<bdd::Node<S>> roots;
  while (!queue.empty() && order.size() < limit) {
    S s = queue.front();
    queue.pop_front();
    order.push_back(s);
    auto t = dfa.transitions(s);
    roots.push_back(t);
    std::vector<bdd::Node<S>> stack{t};
    std::unordered_set<std::uint32_t> visited;
    while (!stack.empty()) {
      auto n = stack.back();
      stack.pop_back();
      if (!visited.insert(n.id).second) continue;
      if (dfa.store().is_leaf(n)) {
        S next = dfa.store().value(n);
        if (seen.insert(next).second) queue.push_back(next);
      } else {
        stack.push_back(dfa.store().lo(n));
        stack.push_back(dfa.store().hi(n));
      }
    }
  }
  std::string body = bdd::to_dot(dfa.store(), roots, state_label, var_label);
  std::ostringstream labels;
  for (std::size_t i = 0; i < order.size(); ++i)
    labels << "  r" << i << " [label=\"" << state_label(order[i]) << "\"];\n";
  body.insert(body.size() - 2, labels.str());
  return body;
}

}  // namespace symkat::automata
