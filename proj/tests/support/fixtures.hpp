#pragma once

// Automata and generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "symkat/automata/symbolic.hpp"
#include "symkat/bdd/boolean.hpp"

namespace fixtures {

using symkat::automata::TableDfa;
using symkat::bdd::BoolManager;
using symkat::bdd::BoolNode;
using symkat::bdd::Manager;
using symkat::bdd::Node;

/// Five states s1..s5 (ids 0..4) over variables a < b < c (0, 1, 2).
///   n = a ? (b ? s3 : s2) : (b ? s3 : (c ? s2 : s1))   shared by s1, s2, s3
///   m = b ? s5 : s4                                    shared by s4, s5
/// Outputs: s3 and s5 are accepting.
struct FiveStates {
  TableDfa<int> dfa{3};
  std::uint32_t s1, s2, s3, s4, s5;
  Node<std::uint32_t> n, m;

  FiveStates() {
    s1 = dfa.add_state(0);
    s2 = dfa.add_state(0);
    s3 = dfa.add_state(1);
    s4 = dfa.add_state(0);
    s5 = dfa.add_state(1);
    auto& st = dfa.store();
    auto leaf = [&](std::uint32_t s) { return st.constant(s); };
    auto c = st.node(2, leaf(s1), leaf(s2));
    auto lo = st.node(1, c, leaf(s3));
    auto hi = st.node(1, leaf(s2), leaf(s3));
    n = st.node(0, lo, hi);
    m = st.node(1, leaf(s4), leaf(s5));
    for (auto s : {s1, s2, s3}) dfa.set_transitions(s, n);
    for (auto s : {s4, s5}) dfa.set_transitions(s, m);
  }
};

/// States s1..s5 (ids 0..4) over a < b: from s_i (i < 5), a leads to
/// s_{i+1}; otherwise b leads back to s1 and !b stays. s5 loops and is the
/// only accepting state.
struct Chain {
  TableDfa<int> dfa{2};
  std::vector<std::uint32_t> s;

  Chain() {
    for (int i = 0; i < 5; ++i) s.push_back(dfa.add_state(i == 4 ? 1 : 0));
    auto& st = dfa.store();
    for (int i = 0; i < 4; ++i) {
      auto lo = st.node(1, st.constant(s[i]), st.constant(s[0]));
      dfa.set_transitions(s[i], st.node(0, lo, st.constant(s[i + 1])));
    }
    dfa.set_transitions(s[4], st.constant(s[4]));
  }
};

/// A node computing the Boolean function given by its truth table
/// (bit k of `table` is the value at the assignment with mask k).
inline BoolNode from_table(BoolManager& m, std::uint64_t table, std::size_t vars,
                           std::size_t var = 0, std::uint64_t prefix = 0) {
  if (var == vars) return m.constant(((table >> prefix) & 1U) != 0);
  auto lo = from_table(m, table, vars, var + 1, prefix);
  auto hi = from_table(m, table, vars, var + 1, prefix | (std::uint64_t{1} << var));
  return m.node(static_cast<symkat::bdd::Var>(var), lo, hi);
}

/// A random Boolean formula built with the BDD operations.
inline BoolNode random_formula(std::mt19937_64& rng, BoolManager& m, std::size_t vars, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  switch (pick(rng)) {
    case 0: return symkat::bdd::literal(m, static_cast<symkat::bdd::Var>(rng() % vars), rng() & 1U);
    case 1: return (rng() % 8 == 0) ? m.constant(rng() & 1U) : symkat::bdd::literal(m, static_cast<symkat::bdd::Var>(rng() % vars));
    case 2: return symkat::bdd::neg(m, random_formula(rng, m, vars, depth - 1));
    case 3: {
      auto l = random_formula(rng, m, vars, depth - 1);
      return symkat::bdd::cnj(m, l, random_formula(rng, m, vars, depth - 1));
    }
    default: {
      auto l = random_formula(rng, m, vars, depth - 1);
      return symkat::bdd::dsj(m, l, random_formula(rng, m, vars, depth - 1));
    }
  }
}

/// A random multi-terminal node with leaves in [0, leaves).
template <class M>
typename M::node_type random_mtbdd(std::mt19937_64& rng, M& m, std::size_t vars, int leaves,
                                   std::size_t var = 0) {
  if (var == vars || rng() % 4 == 0) return m.constant(static_cast<int>(rng() % leaves));
  auto lo = random_mtbdd(rng, m, vars, leaves, var + 1);
  auto hi = random_mtbdd(rng, m, vars, leaves, var + 1);
  return m.node(static_cast<symkat::bdd::Var>(var), lo, hi);
}

/// A random symbolic DFA with `states` states over `vars` variables and
/// outputs in [0, outputs).
inline TableDfa<int> random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t vars,
                                int outputs) {
  TableDfa<int> dfa(vars);
  for (std::size_t i = 0; i < states; ++i) dfa.add_state(static_cast<int>(rng() % outputs));
  auto& st = dfa.store();
  auto build = [&](auto&& self, std::size_t var) -> Node<std::uint32_t> {
    if (var == vars || rng() % 3 == 0) return st.constant(static_cast<std::uint32_t>(rng() % states));
    auto lo = self(self, var + 1);
    auto hi = self(self, var + 1);
    return st.node(static_cast<symkat::bdd::Var>(var), lo, hi);
  };
  for (std::uint32_t s = 0; s < states; ++s) dfa.set_transitions(s, build(build, 0));
  return dfa;
}

}  // namespace fixtures
