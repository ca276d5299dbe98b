#pragma once

// Star normalisation, the Ilie & Yu construction into matricial automata
// <n, u, J, N, v> with test-labelled epsilon transitions J, and their
// elimination into <n, u, 0, J*N, J*v>.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symkat/automata/set_store.hpp"
#include "symkat/bdd/boolean.hpp"
#include "symkat/construct/derivatives.hpp"
#include "symkat/kat/symbolic.hpp"

namespace symkat::construct {

/// Rewrites every x* so that eps^(x) is not the constant 1, preserving the
/// language. Under a star, x° drops tests from sums, removes nested stars,
/// and splits products of factors both accepting every atom:
///   phi° = 0   p° = p   (x+y)° = x° + y°   (x*)° = x°
///   (xy)° = x° + y°  if eps^x = eps^y = 1, and xy otherwise.
/// When x° still accepts every atom, the star is rebuilt from the strict
/// part x^- (the letter-consuming part of x), for which x* = (x^-)*.
ExprId star_normalise(Derivatives& d, ExprId x);

struct EpsNfa {
  std::size_t n = 0;
  std::vector<bool> u;                                        // initial
  std::vector<std::vector<bdd::BoolNode>> J;                  // test labels
  std::vector<std::vector<std::vector<std::uint32_t>>> N;     // letter sets
  std::vector<bool> v;                                        // accepting

  std::size_t add_state(bdd::BoolNode zero);
};

/// One initial state (0) and one accepting state (1).
EpsNfa ilie_yu(kat::Workspace& ws, ExprId x);

/// Places b's states after a's.
EpsNfa disjoint_union(const EpsNfa& a, const EpsNfa& b, bdd::BoolNode zero);

/// Reflexive-transitive closure of J in the algebra of tests, where the
/// star of any test is 1.
std::vector<std::vector<bdd::BoolNode>> test_closure(bdd::BoolManager& m,
                                                     const std::vector<std::vector<bdd::BoolNode>>& J);

/// The epsilon-free symbolic NFA <n, u, 0, J*N, J*v>; rows computed lazily.
class EliminatedNfa {
 public:
  using State = std::uint32_t;
  using Output = bdd::BoolNode;

  EliminatedNfa(kat::Workspace& ws, EpsNfa nfa);

  automata::SetStore<State>& sets() { return sets_; }
  bdd::Manager<SetId>& store() { return store_; }
  bdd::Node<SetId> transitions(State i);
  bdd::BoolNode output(State i) { return outputs_.at(i); }
  bdd::BoolNode join(bdd::BoolNode a, bdd::BoolNode b) { return bdd::dsj(ws_.tests(), a, b); }
  bdd::BoolNode output_unit() { return bdd::bottom(ws_.tests()); }

  const EpsNfa& source() const { return nfa_; }
  const std::vector<std::vector<bdd::BoolNode>>& closure() const { return star_; }
  std::vector<State> initial() const;

 private:
  kat::Workspace& ws_;
  EpsNfa nfa_;
  std::vector<std::vector<bdd::BoolNode>> star_;
  std::vector<bdd::BoolNode> outputs_;
  automata::SetStore<State> sets_;
  bdd::Manager<SetId> store_;
  std::vector<std::optional<bdd::Node<SetId>>> letters_;  // N row k as a BDD
  std::vector<std::optional<bdd::Node<SetId>>> rows_;
};

}  // namespace symkat::construct
