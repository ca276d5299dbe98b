#include <doctest.h>

#include <random>
#include <set>

#include "../support/fixtures.hpp"
#include "symkat/automata/set_store.hpp"
#include "symkat/automata/symbolic.hpp"

using namespace symkat;
using automata::SetId;
using automata::SetStore;

TEST_CASE("bounded language of the five-state automaton") {
  fixtures::FiveStates f;
  auto lang = automata::dfa_language_upto(f.dfa, f.s1, 2);
  CHECK(lang.at({}) == f.dfa.output(f.s1));
  CHECK(lang.size() == 1 + 8 + 64);
  auto step = [&](std::uint32_t s, std::uint64_t mask) {
    return f.dfa.store().eval(f.dfa.transitions(s), bdd::Assignment::from_mask(mask, 3));
  };
  // letters are written abc, bit i of the mask being variable i
  CHECK(step(f.s1, 0b010) == f.s3);  // 010
  CHECK(step(f.s4, 0b100) == f.s4);  // 001
  CHECK(step(f.s1, 0b000) == f.s1);
  CHECK(step(f.s1, 0b100) == f.s2);
  CHECK(step(f.s2, 0b001) == f.s2);
  CHECK(step(f.s5, 0b010) == f.s5);
  CHECK(lang.at({0b010}) == 1);
  CHECK(lang.at({0b000, 0b100}) == 0);
}

TEST_CASE("set store interning") {
  SetStore<int> s;
  CHECK(s.make({}) == s.empty());
  CHECK(s.make({3, 1, 3}) == s.make({1, 3}));
  CHECK(s.members(s.make({3, 1, 3})) == std::vector<int>{1, 3});
  CHECK(s.unite(s.singleton(1), s.singleton(3)) == s.make({1, 3}));
  CHECK(s.subset(s.singleton(1), s.make({1, 3})));
  CHECK_FALSE(s.subset(s.make({1, 2}), s.make({1, 3})));
}

TEST_CASE("pointwise union of set-valued nodes") {
  SetStore<int> sets;
  bdd::Manager<SetId> m(2);
  auto x = m.constant(sets.singleton(1));
  auto y = m.constant(sets.singleton(2));
  auto n = m.node(0, x, y);
  CHECK(automata::set_union(m, sets, n, m.constant(sets.empty())) == n);
  CHECK(automata::set_union(m, sets, n, n) == n);
  CHECK(automata::set_union(m, sets, x, y) == m.constant(sets.make({1, 2})));
  auto u = automata::set_union(m, sets, n, m.node(1, x, y));
  for (std::uint64_t a = 0; a < 4; ++a) {
    auto alpha = bdd::Assignment::from_mask(a, 2);
    std::set<int> expected;
    expected.insert(alpha[0] ? 2 : 1);
    expected.insert(alpha[1] ? 2 : 1);
    auto got = sets.members(m.eval(u, alpha));
    CHECK(std::set<int>(got.begin(), got.end()) == expected);
  }
}

namespace {

automata::TableNfa<bool> random_nfa(std::mt19937_64& rng, std::size_t states, std::size_t vars) {
  automata::TableNfa<bool> nfa(vars, false);
  for (std::size_t i = 0; i < states; ++i) nfa.add_state(rng() % 3 == 0);
  auto& st = nfa.store();
  for (std::uint32_t s = 0; s < states; ++s) {
    auto build = [&](auto&& self, std::size_t var) -> bdd::Node<SetId> {
      if (var == vars || rng() % 3 == 0) {
        std::vector<std::uint32_t> targets;
        for (std::uint32_t t = 0; t < states; ++t)
          if (rng() % 2) targets.push_back(t);
        return st.constant(nfa.sets().make(targets));
      }
      auto lo = self(self, var + 1);
      auto hi = self(self, var + 1);
      return st.node(static_cast<bdd::Var>(var), lo, hi);
    };
    nfa.set_transitions(s, build(build, 0));
  }
  return nfa;
}

// explicit subset simulation
bool nfa_accepts(automata::TableNfa<bool>& nfa, std::uint32_t start,
                 const std::vector<std::uint64_t>& word) {
  std::set<std::uint32_t> current{start};
  const std::size_t vars = nfa.store().num_vars();
  for (auto letter : word) {
    std::set<std::uint32_t> next;
    for (auto s : current) {
      auto target = nfa.store().eval(nfa.transitions(s), bdd::Assignment::from_mask(letter, vars));
      for (auto t : nfa.sets().members(target)) next.insert(t);
    }
    current = std::move(next);
  }
  for (auto s : current)
    if (nfa.output(s)) return true;
  return false;
}

}  // namespace

TEST_CASE("on-the-fly determinisation") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    auto nfa = random_nfa(rng, 3, 2);
    automata::Determinised dfa(nfa);
    auto empty = dfa.start({});
    CHECK(dfa.transitions(empty) == nfa.store().constant(nfa.sets().empty()));
    CHECK(dfa.output(empty) == false);
    for (std::uint32_t x = 0; x < 3; ++x) {
      auto sx = dfa.start({x});
      CHECK(dfa.output(sx) == nfa.output(x));
      auto lang = automata::dfa_language_upto(dfa, sx, 3);
      for (const auto& [word, out] : lang) REQUIRE(out == nfa_accepts(nfa, x, word));
    }
    // monotonicity of the transition function
    auto small = dfa.start({0});
    auto big = dfa.start({0, 2});
    for (std::uint64_t a = 0; a < 4; ++a) {
      auto alpha = bdd::Assignment::from_mask(a, 2);
      CHECK(nfa.sets().subset(nfa.store().eval(dfa.transitions(small), alpha),
                              nfa.store().eval(dfa.transitions(big), alpha)));
    }
  }
}

TEST_CASE("DOT rendering of the reachable fragment") {
  fixtures::FiveStates f;
  auto dot = automata::reachable_dot(
      f.dfa, f.s1, [](std::uint32_t s) { return "s" + std::to_string(s + 1); },
      [](bdd::Var v) { return std::string(1, static_cast<char>('a' + v)); });
  CHECK(dot.find("s3") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("s4") == std::string::npos);
}
