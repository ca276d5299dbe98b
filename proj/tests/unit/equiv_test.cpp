#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "../support/fixtures.hpp"
#include "symkat/equiv/equiv.hpp"
#include "symkat/equiv/union_find.hpp"
#include "symkat/equiv/word.hpp"

using namespace symkat;
using equiv::SymbolicWord;

namespace {

std::string abc(bdd::Var v) { return std::string(1, static_cast<char>('a' + v)); }

template <class D>
typename D::State run_word(D& dfa, typename D::State s, const std::vector<bdd::Assignment>& w) {
  for (const auto& letter : w) s = dfa.store().eval(dfa.transitions(s), letter);
  return s;
}

/// Every concretisation of the witness separates x and y.
template <class D>
bool witness_sound(D& dfa, typename D::State x, typename D::State y, const SymbolicWord& w) {
  for (const auto& word : equiv::concretisations(w, dfa.store().num_vars()))
    if (dfa.output(run_word(dfa, x, word)) == dfa.output(run_word(dfa, y, word))) return false;
  return true;
}

}  // namespace

TEST_CASE("five-state automaton: s1 and s4 are equivalent") {
  fixtures::FiveStates f;
  auto v = equiv::symb_equiv(f.dfa, f.s1, f.s4, {true, true});
  CHECK(v.holds);
  CHECK(v.stats.pairs_pushed == 3);
  CHECK(v.stats.output_tests == 3);
  std::set<std::pair<std::uint32_t, std::uint32_t>> r(v.relation.begin(), v.relation.end());
  CHECK(r == std::set<std::pair<std::uint32_t, std::uint32_t>>{
                 {f.s1, f.s4}, {f.s2, f.s4}, {f.s3, f.s5}});

  equiv::ExplicitView view(f.dfa);
  auto naive = equiv::naive_equiv(view, f.s1, f.s4);
  CHECK(naive.holds);
  CHECK(equiv::is_bisimulation(view, v.relation, std::equal_to<>{}));

  auto d = equiv::dsf_equiv(f.dfa, f.s1, f.s4, {true, true});
  CHECK(d.holds);
  CHECK(d.stats.output_tests <= v.stats.output_tests);
  CHECK(equiv::is_bisimulation_up_to_equivalence(view, d.relation));
}

TEST_CASE("five-state automaton: partition into two classes") {
  fixtures::FiveStates f;
  equiv::ExplicitView view(f.dfa);
  std::vector<std::uint32_t> states{f.s1, f.s2, f.s3, f.s4, f.s5};
  for (auto x : states)
    for (auto y : states) {
      bool same_class = f.dfa.output(x) == f.dfa.output(y);
      CHECK(equiv::symb_equiv(f.dfa, x, y).holds == same_class);
      CHECK(equiv::dsf_equiv(f.dfa, x, y).holds == same_class);
      CHECK(equiv::naive_equiv(view, x, y).holds == same_class);
    }
}

TEST_CASE("a state against itself") {
  fixtures::FiveStates f;
  CHECK(equiv::dsf_equiv(f.dfa, f.s2, f.s2).stats.output_tests == 1);
  auto v = equiv::symb_equiv(f.dfa, f.s2, f.s2);
  CHECK(v.holds);
  CHECK_FALSE(v.outputs.has_value());
  CHECK(equiv::symb_incl(f.dfa, f.s2, f.s2, std::less_equal<>{}).holds);
}

TEST_CASE("forest iteration on a node against itself visits nothing") {
  fixtures::FiveStates f;
  equiv::ForestPairIterator<automata::TableDfa<int>::Store> forest(f.dfa.store());
  int visits = 0;
  forest.run(f.n, f.n, [&](auto, auto) { ++visits; });
  CHECK(visits == 0);
}

TEST_CASE("forest on the five-state automaton") {
  fixtures::FiveStates f;
  auto& st = f.dfa.store();
  equiv::ForestPairIterator<automata::TableDfa<int>::Store> forest(st);
  forest.run(f.n, f.m, [](auto, auto) {});
  auto leaf = [&](std::uint32_t s) { return st.constant(s).id; };
  CHECK(forest.forest().same(leaf(f.s1), leaf(f.s4)));
  CHECK(forest.forest().same(leaf(f.s2), leaf(f.s4)));
  CHECK(forest.forest().same(leaf(f.s3), leaf(f.s5)));
  CHECK_FALSE(forest.forest().same(leaf(f.s1), leaf(f.s3)));
  CHECK(forest.forest().same(f.n.id, f.m.id));
}

TEST_CASE("symbolic counter-example a a a") {
  fixtures::Chain c;
  auto v = equiv::symb_equiv(c.dfa, c.s[0], c.s[1]);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.size() == 3);
  for (const auto& letter : v.witness.letters)
    CHECK(letter == equiv::Letter{{0, true}});
  CHECK(equiv::render(v.witness, abc) == "[+a];[+a];[+a]");
  CHECK(witness_sound(c.dfa, c.s[0], c.s[1], v.witness));

  auto d = equiv::dsf_equiv(c.dfa, c.s[0], c.s[1]);
  CHECK_FALSE(d.holds);
  CHECK(d.witness == v.witness);

  equiv::ExplicitView view(c.dfa);
  auto naive = equiv::naive_equiv(view, c.s[0], c.s[1]);
  CHECK_FALSE(naive.holds);
  CHECK(naive.witness.size() == 3);
}

TEST_CASE("distinct outputs give the empty witness") {
  fixtures::FiveStates f;
  auto v = equiv::symb_equiv(f.dfa, f.s1, f.s3);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.empty());
  CHECK(equiv::render(v.witness, abc) == "<empty>");
  CHECK(v.outputs == std::optional<std::pair<int, int>>({0, 1}));
}

TEST_CASE("forest iteration skips pairs equal up to equivalence") {
  automata::TableDfa<int> dfa(2);
  auto s1 = dfa.add_state(0);
  auto s2 = dfa.add_state(0);
  auto& st = dfa.store();
  auto l1 = st.constant(s1);
  auto l2 = st.constant(s2);
  auto n1 = st.node(0, l1, st.node(1, l1, l2));
  auto m1 = st.node(0, l2, st.node(1, l2, l1));

  equiv::PairIterator<automata::TableDfa<int>::Store> plain(st);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen_plain;
  plain.run(n1, m1, [&](auto v, auto w, const auto&) { seen_plain.emplace_back(v, w); });
  CHECK(seen_plain.size() == 2);

  equiv::ForestPairIterator<automata::TableDfa<int>::Store> forest(st);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen_forest;
  forest.run(n1, m1, [&](auto v, auto w) { seen_forest.emplace_back(v, w); });
  CHECK(seen_forest.size() == 1);
  CHECK(forest.forest().same(n1.id, m1.id));
  CHECK(forest.forest().same(l1.id, l2.id));
}

TEST_CASE("inclusion on Boolean outputs") {
  automata::TableDfa<bool> dfa(1);
  auto x = dfa.add_state(false);
  auto y = dfa.add_state(true);
  auto& st = dfa.store();
  dfa.set_transitions(x, st.node(0, st.constant(x), st.constant(y)));
  dfa.set_transitions(y, st.constant(y));
  auto leq = [](bool a, bool b) { return !a || b; };
  CHECK(equiv::symb_incl(dfa, x, y, leq).holds);
  auto v = equiv::symb_incl(dfa, y, x, leq);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.empty());
}

TEST_CASE("random automata: agreement, witnesses and certificates") {
  std::mt19937_64 rng(2024);
  int inequivalent = 0;
  for (int round = 0; round < 300; ++round) {
    auto dfa = fixtures::random_dfa(rng, 2 + rng() % 5, 1 + rng() % 3, 2);
    auto n = static_cast<std::uint32_t>(dfa.num_states());
    auto x = static_cast<std::uint32_t>(rng() % n);
    auto y = static_cast<std::uint32_t>(rng() % n);
    equiv::ExplicitView view(dfa);
    auto naive = equiv::naive_equiv(view, x, y, {true, true});
    auto symb = equiv::symb_equiv(dfa, x, y, {true, true});
    auto dsf = equiv::dsf_equiv(dfa, x, y, {true, true});
    REQUIRE(naive.holds == symb.holds);
    REQUIRE(symb.holds == dsf.holds);
    if (symb.holds) {
      CHECK(equiv::is_bisimulation(view, naive.relation, std::equal_to<>{}));
      CHECK(equiv::is_bisimulation(view, symb.relation, std::equal_to<>{}));
      CHECK(equiv::is_bisimulation_up_to_equivalence(view, dsf.relation));
      CHECK(dsf.stats.output_tests <= symb.stats.output_tests);
    } else {
      ++inequivalent;
      CHECK(symb.witness.size() == naive.witness.size());
      CHECK(witness_sound(dfa, x, y, symb.witness));
      CHECK(witness_sound(dfa, x, y, dsf.witness));
      CHECK(witness_sound(dfa, x, y, naive.witness));
    }
  }
  CHECK(inequivalent > 20);
}

TEST_CASE("certificate checks reject non-bisimulations") {
  fixtures::FiveStates f;
  equiv::ExplicitView view(f.dfa);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> wrong{{f.s1, f.s4}};
  CHECK_FALSE(equiv::is_bisimulation(view, wrong, std::equal_to<>{}));
  CHECK_FALSE(equiv::is_bisimulation_up_to_equivalence(
      view, std::vector<std::pair<std::uint32_t, std::uint32_t>>{{f.s1, f.s3}}));
}

TEST_CASE("explicit view enforces its cap") {
  automata::TableDfa<int> dfa(13);
  dfa.add_state(0);
  CHECK_THROWS_AS(equiv::ExplicitView{dfa}, std::invalid_argument);
  CHECK_NOTHROW(equiv::ExplicitView{dfa, std::size_t{1} << 13});
}

TEST_CASE("disjoint set forest keeps the partition under halving") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 100; ++round) {
    equiv::DisjointSetForest f;
    const std::uint32_t n = 30;
    std::vector<std::uint32_t> cls(n);
    for (std::uint32_t i = 0; i < n; ++i) cls[i] = i;
    for (int step = 0; step < 80; ++step) {
      auto a = static_cast<std::uint32_t>(rng() % n);
      auto b = static_cast<std::uint32_t>(rng() % n);
      if (rng() % 2) {
        auto ra = f.find(a);
        auto rb = f.find(b);
        if (ra != rb) {
          if (rng() % 2)
            f.link_by_size(ra, rb);
          else
            f.link(ra, rb);
          auto old = cls[a];
          for (auto& c : cls)
            if (c == old) c = cls[b];
        }
      } else {
        f.find(a);
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        // the parent chain is finite and ends at the representative
        std::uint32_t x = i;
        for (std::uint32_t hops = 0; f.parent(x) != x; ++hops) {
          REQUIRE(hops <= n);
          x = f.parent(x);
        }
        for (std::uint32_t j = 0; j < n; ++j) REQUIRE(f.same(i, j) == (cls[i] == cls[j]));
      }
    }
  }
}

TEST_CASE("concretisations enumerate or sample free bits") {
  SymbolicWord w{{{{0, true}}, {}}};
  auto all = equiv::concretisations(w, 3);
  CHECK(all.size() == 32);
  for (const auto& word : all) CHECK(word[0][0]);
  auto sampled = equiv::concretisations(SymbolicWord{{{}, {}, {}, {}}}, 4, 64);
  CHECK(sampled.size() == 64);
}
