#pragma once

// Boolean BDDs: the leaf type is bool.

#include <optional>

#include "symkat/bdd/manager.hpp"

namespace symkat::bdd {

using BoolManager = Manager<bool>;
using BoolNode = Node<bool>;

inline BoolNode top(BoolManager& m) { return m.constant(true); }
inline BoolNode bottom(BoolManager& m) { return m.constant(false); }
inline BoolNode literal(BoolManager& m, Var a, bool positive = true) {
  return m.var_node(a, !positive, positive);
}

inline BoolNode dsj(BoolManager& m, BoolNode x, BoolNode y) {
  auto t = m.constant(true);
  auto f = m.constant(false);
  auto shortcut = [&](BoolNode a, BoolNode b) -> std::optional<BoolNode> {
    if (a == t || b == f || a == b) return a;
    if (b == t || a == f) return b;
    return std::nullopt;
  };
  return apply(m, m.op("or"), m, x, m, y, [](bool a, bool b) { return a || b; }, shortcut);
}

inline BoolNode cnj(BoolManager& m, BoolNode x, BoolNode y) {
  auto t = m.constant(true);
  auto f = m.constant(false);
  auto shortcut = [&](BoolNode a, BoolNode b) -> std::optional<BoolNode> {
    if (a == f || b == t || a == b) return a;
    if (b == f || a == t) return b;
    return std::nullopt;
  };
  return apply(m, m.op("and"), m, x, m, y, [](bool a, bool b) { return a && b; }, shortcut);
}

inline BoolNode neg(BoolManager& m, BoolNode x) {
  return map_leaves(m, m.op("not"), m, x, [](bool b) { return !b; });
}

/// x <= y pointwise.
inline bool implies(BoolManager& m, BoolNode x, BoolNode y) { return dsj(m, x, y) == y; }

}  // namespace symkat::bdd
