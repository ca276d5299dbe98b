#pragma once

// Hash-consed, reduced, ordered, multi-terminal BDDs.
//
// A Manager<B> owns every node whose leaves carry values of type B. Nodes
// are canonical: two handles are equal iff they denote the same function
// 2^Vars -> B. Operations that combine nodes of several managers (apply,
// guard, ...) only require the managers to share the same variable count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace symkat::bdd {

using Var = std::uint32_t;

inline constexpr Var kLeafVar = std::numeric_limits<Var>::max();

class OrderingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical handle to a node of a Manager<B>.
template <class B>
struct Node {
  std::uint32_t id = 0;

  friend constexpr bool operator==(Node, Node) = default;
  friend constexpr auto operator<=>(Node, Node) = default;
};

/// Identifies a memoised operation inside a manager's memo table.
struct OpTag {
  std::uint32_t value = 0;
  friend constexpr bool operator==(OpTag, OpTag) = default;
};

/// A total valuation of the manager's variables (an element of 2^Vars).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_vars) : bits_(num_vars, 0) {}

  /// Bit i of `mask` gives the value of variable i.
  static Assignment from_mask(std::uint64_t mask, std::size_t num_vars) {
    Assignment a(num_vars);
    for (std::size_t i = 0; i < num_vars && i < 64; ++i) a.bits_[i] = (mask >> i) & 1U;
    return a;
  }

  bool operator[](Var v) const { return bits_.at(v) != 0; }
  void set(Var v, bool value) { bits_.at(v) = value ? 1 : 0; }
  std::size_t size() const { return bits_.size(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

struct Triple {
  std::uint32_t a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    return static_cast<std::size_t>(
        mix((std::uint64_t{t.a} << 32 | t.b) ^ mix(std::uint64_t{t.c} + 0x9e3779b97f4a7c15ULL)));
  }
};

}  // namespace detail

template <class B, class Hash = std::hash<B>, class Eq = std::equal_to<B>>
class Manager {
 public:
  using value_type = B;
  using node_type = Node<B>;

  explicit Manager(std::size_t num_vars) : num_vars_(num_vars) {}

  Manager(const Manager&) = delete;
  Manager& operator=(const Manager&) = delete;
  Manager(Manager&&) = default;
  Manager& operator=(Manager&&) = default;

  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return slots_.size(); }

  Node<B> constant(const B& v) {
    if (auto it = leaves_.find(v); it != leaves_.end()) return Node<B>{it->second};
    auto id = static_cast<std::uint32_t>(slots_.size());
    slots_.push_back({kLeafVar, static_cast<std::uint32_t>(values_.size()), 0});
    values_.push_back(Box{v});
    leaves_.emplace(v, id);
    return Node<B>{id};
  }

  /// Reduced node constructor: node(a, l, l) == l.
  Node<B> node(Var a, Node<B> lo, Node<B> hi) {
    if (a >= num_vars_) throw OrderingError("variable out of range");
    if (lo == hi) return lo;
    if (var(lo) <= a || var(hi) <= a)
      throw OrderingError("child variable must be greater than the parent variable");
    detail::Triple key{a, lo.id, hi.id};
    if (auto it = branches_.find(key); it != branches_.end()) return Node<B>{it->second};
    auto id = static_cast<std::uint32_t>(slots_.size());
    slots_.push_back({a, lo.id, hi.id});
    branches_.emplace(key, id);
    return Node<B>{id};
  }

  /// The node testing variable `a`: lo -> constant(if_false), hi -> constant(if_true).
  Node<B> var_node(Var a, const B& if_false, const B& if_true) {
    auto lo = constant(if_false);
    auto hi = constant(if_true);
    return node(a, lo, hi);
  }

  bool is_leaf(Node<B> n) const { return slot(n).var == kLeafVar; }
  Var var(Node<B> n) const { return slot(n).var; }
  Node<B> lo(Node<B> n) const { return Node<B>{slot(n).lo}; }
  Node<B> hi(Node<B> n) const { return Node<B>{slot(n).hi}; }
  const B& value(Node<B> n) const { return values_[slot(n).lo].v; }

  const B& eval(Node<B> n, const Assignment& alpha) const {
    while (!is_leaf(n)) n = alpha[var(n)] ? hi(n) : lo(n);
    return value(n);
  }

  /// Interns (name, param) into a tag for the memo table.
  OpTag op(std::string_view name, std::uint64_t param = 0) {
    auto key = std::make_pair(std::string(name), param);
    auto [it, inserted] = ops_.try_emplace(std::move(key), static_cast<std::uint32_t>(ops_.size()));
    return OpTag{it->second};
  }

  std::optional<Node<B>> memo_find(OpTag tag, std::uint32_t a, std::uint32_t b) const {
    auto it = memo_.find(detail::Triple{tag.value, a, b});
    if (it == memo_.end()) return std::nullopt;
    return Node<B>{it->second};
  }

  void memo_store(OpTag tag, std::uint32_t a, std::uint32_t b, Node<B> result) {
    memo_.insert_or_assign(detail::Triple{tag.value, a, b}, result.id);
  }

  void clear_memo() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }

  /// Walks the node store; returns a description of every violated invariant.
  std::vector<std::string> check_invariants() const {
    std::vector<std::string> problems;
    for (std::uint32_t id = 0; id < slots_.size(); ++id) {
      const auto& s = slots_[id];
      Node<B> n{id};
      if (s.var == kLeafVar) {
        auto it = leaves_.find(values_[s.lo].v);
        if (it == leaves_.end() || it->second != id)
          problems.push_back("leaf " + std::to_string(id) + " not uniquely interned");
        continue;
      }
      if (s.lo == s.hi) problems.push_back("node " + std::to_string(id) + " has lo == hi");
      if (s.lo >= id || s.hi >= id)
        problems.push_back("node " + std::to_string(id) + " refers to a younger node");
      if (var(lo(n)) <= s.var || var(hi(n)) <= s.var)
        problems.push_back("node " + std::to_string(id) + " violates variable order");
      auto it = branches_.find(detail::Triple{s.var, s.lo, s.hi});
      if (it == branches_.end() || it->second != id)
        problems.push_back("node " + std::to_string(id) + " not uniquely interned");
    }
    if (leaves_.size() + branches_.size() != slots_.size())
      problems.push_back("interning tables out of sync with node store");
    return problems;
  }

 private:
  struct Slot {
    Var var;
    std::uint32_t lo;
    std::uint32_t hi;
  };
  struct Box {
    B v;
  };
  struct OpKeyHash {
    std::size_t operator()(const std::pair<std::string, std::uint64_t>& k) const {
      return std::hash<std::string>{}(k.first) ^ detail::mix(k.second);
    }
  };

  const Slot& slot(Node<B> n) const { return slots_[n.id]; }

  std::size_t num_vars_;
  std::vector<Slot> slots_;
  std::vector<Box> values_;
  std::unordered_map<B, std::uint32_t, Hash, Eq> leaves_;
  std::unordered_map<detail::Triple, std::uint32_t, detail::TripleHash> branches_;
  std::unordered_map<detail::Triple, std::uint32_t, detail::TripleHash> memo_;
  std::unordered_map<std::pair<std::string, std::uint64_t>, std::uint32_t, OpKeyHash> ops_;
};

struct NoShortcut {
  template <class X, class Y>
  constexpr std::nullopt_t operator()(X, Y) const {
    return std::nullopt;
  }
};

namespace detail {

template <class Out, class MX, class MY, class F, class S>
struct Zipper {
  using OutNode = typename Out::node_type;
  using XNode = typename MX::node_type;
  using YNode = typename MY::node_type;

  Out& out;
  OpTag tag;
  const MX& mx;
  const MY& my;
  F& f;
  S& shortcut;

  OutNode run(XNode x, YNode y) {
    if (std::optional<OutNode> s = shortcut(x, y)) return *s;
    if (auto hit = out.memo_find(tag, x.id, y.id)) return *hit;
    OutNode result;
    Var vx = mx.var(x);
    Var vy = my.var(y);
    if (vx == kLeafVar && vy == kLeafVar) {
      result = out.constant(f(mx.value(x), my.value(y)));
    } else {
      Var a = vx < vy ? vx : vy;
      XNode xl = vx == a ? mx.lo(x) : x;
      XNode xh = vx == a ? mx.hi(x) : x;
      YNode yl = vy == a ? my.lo(y) : y;
      YNode yh = vy == a ? my.hi(y) : y;
      OutNode l = run(xl, yl);
      OutNode h = run(xh, yh);
      result = out.node(a, l, h);
    }
    out.memo_store(tag, x.id, y.id, result);
    return result;
  }
};

}  // namespace detail

/// apply f x y: the node of alpha |-> f([[x]](alpha), [[y]](alpha)).
/// `shortcut(x, y)` may return a result early (e.g. absorbing constants).
/// Results are memoised in `out` under `tag`, which must identify f together
/// with the operand managers.
template <class Out, class MX, class MY, class F, class S = NoShortcut>
typename Out::node_type apply(Out& out, OpTag tag, const MX& mx, typename MX::node_type x,
                              const MY& my, typename MY::node_type y, F&& f, S&& shortcut = S{}) {
  if (mx.num_vars() != out.num_vars() || my.num_vars() != out.num_vars())
    throw std::invalid_argument("apply: managers disagree on the variable universe");
  detail::Zipper<Out, MX, MY, std::remove_reference_t<F>, std::remove_reference_t<S>> z{
      out, tag, mx, my, f, shortcut};
  return z.run(x, y);
}

/// Pointwise g on the leaves of n.
template <class Out, class MI, class G>
typename Out::node_type map_leaves(Out& out, OpTag tag, const MI& in, typename MI::node_type n,
                                   G&& g) {
  using OutNode = typename Out::node_type;
  using InNode = typename MI::node_type;
  if (in.num_vars() != out.num_vars())
    throw std::invalid_argument("map_leaves: managers disagree on the variable universe");
  auto rec = [&](auto&& self, InNode m) -> OutNode {
    if (auto hit = out.memo_find(tag, m.id, 0)) return *hit;
    OutNode result;
    if (in.is_leaf(m)) {
      result = out.constant(g(in.value(m)));
    } else {
      OutNode l = self(self, in.lo(m));
      OutNode h = self(self, in.hi(m));
      result = out.node(in.var(m), l, h);
    }
    out.memo_store(tag, m.id, 0, result);
    return result;
  };
  return rec(rec, n);
}

/// alpha |-> [[n]](alpha) if [[f]](alpha) else zero.
template <class Out, class MF>
typename Out::node_type guard(Out& out, const MF& fm, typename MF::node_type f,
                              typename Out::node_type n, const typename Out::value_type& zero) {
  using V = typename Out::value_type;
  auto zero_node = out.constant(zero);
  OpTag tag = out.op("guard", zero_node.id);
  auto shortcut = [&](typename MF::node_type g,
                      typename Out::node_type m) -> std::optional<typename Out::node_type> {
    if (fm.is_leaf(g)) return fm.value(g) ? m : zero_node;
    if (m == zero_node) return zero_node;
    return std::nullopt;
  };
  return apply(out, tag, fm, f, out, n, [&](bool b, const V& v) { return b ? v : zero; }, shortcut);
}

/// Renders nodes reachable from `roots` in DOT: leaves are boxes, lo edges dashed.
template <class M, class LeafLabel, class VarLabel>
std::string to_dot(const M& m, const std::vector<typename M::node_type>& roots,
                   LeafLabel&& leaf_label, VarLabel&& var_label) {
  std::ostringstream out;
  out << "digraph bdd {\n";
  std::vector<bool> seen(m.size(), false);
  std::vector<typename M::node_type> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    if (seen[n.id]) continue;
    seen[n.id] = true;
    if (m.is_leaf(n)) {
      out << "  n" << n.id << " [shape=box,label=\"" << leaf_label(m.value(n)) << "\"];\n";
      continue;
    }
    out << "  n" << n.id << " [shape=circle,label=\"" << var_label(m.var(n)) << "\"];\n";
    out << "  n" << n.id << " -> n" << m.lo(n).id << " [style=dashed];\n";
    out << "  n" << n.id << " -> n" << m.hi(n).id << ";\n";
    stack.push_back(m.lo(n));
    stack.push_back(m.hi(n));
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    out << "  r" << i << " [shape=plaintext,label=\"root " << i << "\"];\n  r" << i << " -> n"
        << roots[i].id << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace symkat::bdd

template <class B>
struct std::hash<symkat::bdd::Node<B>> {
  std::size_t operator()(symkat::bdd::Node<B> n) const noexcept {
    return std::hash<std::uint32_t>{}(n.id);
  }
};
