#pragma once

// Coinductive equivalence and inclusion checking for (symbolic) DFAs.
//
//   naive_check   per-letter exploration over an explicitly enumerated alphabet
//   symb_check    symbolic exploration of reachable pairs through `PairIterator`
//   dsf_check     symbolic Hopcroft-Karp: BDD nodes are related in a disjoint
//                 set forest, which replaces the visited relation
//
// All three process pairs in FIFO order and count one output test per pair
// whose outputs are compared.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symkat/automata/symbolic.hpp"
#include "symkat/equiv/union_find.hpp"
#include "symkat/equiv/word.hpp"

namespace symkat::equiv {

struct Stats {
  std::size_t output_tests = 0;
  std::size_t pairs_pushed = 0;  // excludes the initial pair
  std::size_t nodes_visited = 0;
  std::size_t leaf_visits = 0;
};

template <class State, class Output>
struct Verdict {
  bool holds = true;  // equivalent (or included)
  SymbolicWord witness;
  std::optional<std::pair<Output, Output>> outputs;
  Stats stats;
  // symb/naive: the visited relation; dsf: (leaf state, representative
  // state) for every linked leaf.
  std::vector<std::pair<State, State>> relation;
};

namespace detail {

template <class S>
struct PairHash {
  std::size_t operator()(const std::pair<S, S>& p) const {
    return static_cast<std::size_t>(
        bdd::detail::mix(std::hash<S>{}(p.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<S>{}(p.second)));
  }
};

/// Words shared through parent links; node 0 is the empty word.
class WordTree {
 public:
  WordTree() : nodes_(1) {}
  std::uint32_t extend(std::uint32_t parent, Letter letter) {
    nodes_.push_back({parent, std::move(letter)});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  SymbolicWord word(std::uint32_t n) const {
    SymbolicWord w;
    for (; n != 0; n = nodes_[n].parent) w.letters.push_back(nodes_[n].letter);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }

 private:
  struct Entry {
    std::uint32_t parent = 0;
    Letter letter;
  };
  std::vector<Entry> nodes_;
};

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return std::uint64_t{a} << 32 | b;
}

}  // namespace detail

/// Enumerates the leaf pairs reachable by zipping two nodes of one store.
/// Node pairs are memoised across calls: a pair seen before triggers nothing.
/// When path recording is on, the visitor also receives the literals taken
/// on the way (negative for lo children, positive for hi children).
template <class M>
class PairIterator {
 public:
  using NodeT = typename M::node_type;
  using Value = typename M::value_type;

  explicit PairIterator(const M& store, bool record_path = false)
      : store_(store), record_(record_path) {}

  template <class Visit>
  void run(NodeT x, NodeT y, Visit&& visit) {
    if (!memo_.insert(detail::pair_key(x.id, y.id)).second) return;
    ++nodes_visited_;
    bdd::Var vx = store_.var(x);
    bdd::Var vy = store_.var(y);
    if (vx == bdd::kLeafVar && vy == bdd::kLeafVar) {
      ++leaf_visits_;
      visit(store_.value(x), store_.value(y), path_);
      return;
    }
    bdd::Var a = vx < vy ? vx : vy;
    NodeT xl = vx == a ? store_.lo(x) : x;
    NodeT xh = vx == a ? store_.hi(x) : x;
    NodeT yl = vy == a ? store_.lo(y) : y;
    NodeT yh = vy == a ? store_.hi(y) : y;
    if (record_) path_.push_back({a, false});
    run(xl, yl, visit);
    if (record_) path_.back().positive = true;
    run(xh, yh, visit);
    if (record_) path_.pop_back();
  }

  std::size_t nodes_visited() const { return nodes_visited_; }
  std::size_t leaf_visits() const { return leaf_visits_; }

 private:
  const M& store_;
  bool record_;
  std::unordered_set<std::uint64_t> memo_;
  Letter path_;
  std::size_t nodes_visited_ = 0;
  std::size_t leaf_visits_ = 0;
};

/// The forest-based variant of PairIterator: node pairs already equated in
/// the forest are skipped, and every visited pair of representatives is
/// linked before recursing. Links go node -> leaf and smaller label -> larger
/// label; leaf/leaf and equal-label links use union by size.
template <class M>
class ForestPairIterator {
 public:
  using NodeT = typename M::node_type;
  using Value = typename M::value_type;

  explicit ForestPairIterator(const M& store) : store_(store) {}

  template <class Visit>
  void run(NodeT x, NodeT y, Visit&& visit) {
    std::uint32_t rx = forest_.find(x.id);
    std::uint32_t ry = forest_.find(y.id);
    if (rx == ry) return;
    ++nodes_visited_;
    NodeT nx{rx};
    NodeT ny{ry};
    bdd::Var vx = store_.var(nx);
    bdd::Var vy = store_.var(ny);
    if (vx == bdd::kLeafVar && vy == bdd::kLeafVar) {
      forest_.link_by_size(rx, ry);
      ++leaf_visits_;
      visit(store_.value(nx), store_.value(ny));
    } else if (vx == bdd::kLeafVar) {
      forest_.link(ry, rx);
      run(nx, store_.lo(ny), visit);
      run(nx, store_.hi(ny), visit);
    } else if (vy == bdd::kLeafVar) {
      forest_.link(rx, ry);
      run(store_.lo(nx), ny, visit);
      run(store_.hi(nx), ny, visit);
    } else if (vx == vy) {
      forest_.link_by_size(rx, ry);
      run(store_.lo(nx), store_.lo(ny), visit);
      run(store_.hi(nx), store_.hi(ny), visit);
    } else if (vx < vy) {
      forest_.link(rx, ry);
      run(store_.lo(nx), ny, visit);
      run(store_.hi(nx), ny, visit);
    } else {
      forest_.link(ry, rx);
      run(nx, store_.lo(ny), visit);
      run(nx, store_.hi(ny), visit);
    }
  }

  DisjointSetForest& forest() { return forest_; }
  std::size_t nodes_visited() const { return nodes_visited_; }
  std::size_t leaf_visits() const { return leaf_visits_; }

 private:
  const M& store_;
  DisjointSetForest forest_;
  std::size_t nodes_visited_ = 0;
  std::size_t leaf_visits_ = 0;
};

struct Options {
  bool track_witness = true;
  bool keep_relation = false;
};

/// Symbolic pair exploration. `check(o(x), o(y))` is the output test:
/// equality for equivalence, a preorder for inclusion.
template <automata::SymbolicDfa D, class Check>
Verdict<typename D::State, typename D::Output> symb_check(D& dfa, typename D::State x,
                                                          typename D::State y, Check&& check,
                                                          Options opts = {}) {
  using S = typename D::State;
  struct Item {
    std::uint32_t word;
    S x, y;
  };
  Verdict<S, typename D::Output> verdict;
  detail::WordTree words;
  std::deque<Item> todo{{0, x, y}};
  std::unordered_set<std::pair<S, S>, detail::PairHash<S>> r;
  PairIterator<typename D::Store> pairs(dfa.store(), opts.track_witness);
  std::uint32_t current = 0;
  auto push = [&](const S& v, const S& w, const Letter& path) {
    std::uint32_t word = opts.track_witness ? words.extend(current, path) : 0;
    todo.push_back({word, v, w});
    ++verdict.stats.pairs_pushed;
  };
  while (!todo.empty()) {
    Item item = todo.front();
    todo.pop_front();
    if (r.contains({item.x, item.y})) continue;
    ++verdict.stats.output_tests;
    auto ox = dfa.output(item.x);
    auto oy = dfa.output(item.y);
    if (!check(ox, oy)) {
      verdict.holds = false;
      verdict.witness = words.word(item.word);
      verdict.outputs.emplace(ox, oy);
      break;
    }
    current = item.word;
    auto tx = dfa.transitions(item.x);
    auto ty = dfa.transitions(item.y);
    pairs.run(tx, ty, push);
    r.insert({item.x, item.y});
  }
  verdict.stats.nodes_visited = pairs.nodes_visited();
  verdict.stats.leaf_visits = pairs.leaf_visits();
  if (opts.keep_relation) verdict.relation.assign(r.begin(), r.end());
  return verdict;
}

template <automata::SymbolicDfa D>
auto symb_equiv(D& dfa, typename D::State x, typename D::State y, Options opts = {}) {
  return symb_check(dfa, x, y, std::equal_to<>{}, opts);
}

/// Inclusion w.r.t. a preorder on outputs: [[x]](w) <= [[y]](w) for all w.
template <automata::SymbolicDfa D, class Leq>
auto symb_incl(D& dfa, typename D::State x, typename D::State y, Leq&& leq, Options opts = {}) {
  return symb_check(dfa, x, y, std::forward<Leq>(leq), opts);
}

/// Symbolic Hopcroft-Karp with disjoint set forests over BDD nodes.
/// On failure the witness is recovered by a symbolic exploration, which is
/// not counted in the statistics.
template <automata::SymbolicDfa D>
Verdict<typename D::State, typename D::Output> dsf_equiv(D& dfa, typename D::State x,
                                                         typename D::State y, Options opts = {}) {
  using S = typename D::State;
  Verdict<S, typename D::Output> verdict;
  std::deque<std::pair<S, S>> todo{{x, y}};
  ForestPairIterator<typename D::Store> pairs(dfa.store());
  // The initial pair enters the forest through its leaves, so that reaching
  // it again costs no output test.
  auto lx = dfa.store().constant(x);
  auto ly = dfa.store().constant(y);
  if (lx != ly) pairs.forest().link_by_size(lx.id, ly.id);
  auto push = [&](const S& v, const S& w) {
    todo.emplace_back(v, w);
    ++verdict.stats.pairs_pushed;
  };
  while (!todo.empty()) {
    auto [sx, sy] = todo.front();
    todo.pop_front();
    ++verdict.stats.output_tests;
    auto ox = dfa.output(sx);
    auto oy = dfa.output(sy);
    if (!(ox == oy)) {
      verdict.holds = false;
      verdict.outputs.emplace(ox, oy);
      break;
    }
    auto tx = dfa.transitions(sx);
    auto ty = dfa.transitions(sy);
    pairs.run(tx, ty, push);
  }
  verdict.stats.nodes_visited = pairs.nodes_visited();
  verdict.stats.leaf_visits = pairs.leaf_visits();
  if (opts.keep_relation) {
    auto& forest = pairs.forest();
    auto& store = dfa.store();
    for (std::uint32_t id = 0; id < forest.extent(); ++id) {
      bdd::Node<S> n{id};
      if (forest.parent(id) == id || !store.is_leaf(n)) continue;
      bdd::Node<S> root{forest.find(id)};
      if (!store.is_leaf(root)) throw std::logic_error("dsf_equiv: leaf linked under a decision node");
      verdict.relation.emplace_back(store.value(n), store.value(root));
    }
  }
  if (!verdict.holds && opts.track_witness) {
    auto replay = symb_check(dfa, x, y, std::equal_to<>{}, Options{true, false});
    if (replay.holds) throw std::logic_error("dsf_equiv: verdicts of symbolic replay disagree");
    verdict.witness = std::move(replay.witness);
    verdict.outputs = std::move(replay.outputs);
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Explicit alphabets.

template <class E>
concept ExplicitDfa = requires(E& e, typename E::State s, std::size_t a) {
  typename E::State;
  typename E::Output;
  { e.num_letters() } -> std::convertible_to<std::size_t>;
  { e.step(s, a) } -> std::convertible_to<typename E::State>;
  { e.output(s) } -> std::convertible_to<typename E::Output>;
  { e.letter(a) } -> std::convertible_to<Letter>;
};

/// A symbolic DFA seen through its explicit alphabet 2^Vars.
template <automata::SymbolicDfa D>
class ExplicitView {
 public:
  using State = typename D::State;
  using Output = typename D::Output;

  explicit ExplicitView(D& dfa, std::size_t max_letters = std::size_t{1} << 12) : dfa_(dfa) {
    std::size_t vars = dfa.store().num_vars();
    if (vars >= 63 || (std::size_t{1} << vars) > max_letters)
      throw std::invalid_argument("explicit alphabet exceeds the configured cap");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vars); ++m)
      letters_.push_back(bdd::Assignment::from_mask(m, vars));
  }

  std::size_t num_letters() const { return letters_.size(); }
  State step(const State& s, std::size_t a) {
    return dfa_.store().eval(dfa_.transitions(s), letters_[a]);
  }
  Output output(const State& s) { return dfa_.output(s); }
  Letter letter(std::size_t a) const {
    Letter l;
    for (bdd::Var v = 0; v < letters_[a].size(); ++v) l.push_back({v, letters_[a][v]});
    return l;
  }

 private:
  D& dfa_;
  std::vector<bdd::Assignment> letters_;
};

/// Per-letter exploration with a visited relation.
template <ExplicitDfa E, class Check>
Verdict<typename E::State, typename E::Output> naive_check(E& dfa, typename E::State x,
                                                           typename E::State y, Check&& check,
                                                           Options opts = {}) {
  using S = typename E::State;
  struct Item {
    std::uint32_t word;
    S x, y;
  };
  struct Step {
    std::uint32_t parent;
    std::uint32_t letter;
  };
  Verdict<S, typename E::Output> verdict;
  std::vector<Step> steps{{0, 0}};
  std::deque<Item> todo{{0, x, y}};
  std::unordered_set<std::pair<S, S>, detail::PairHash<S>> r;
  const std::size_t letters = dfa.num_letters();
  while (!todo.empty()) {
    Item item = todo.front();
    todo.pop_front();
    if (r.contains({item.x, item.y})) continue;
    ++verdict.stats.output_tests;
    auto ox = dfa.output(item.x);
    auto oy = dfa.output(item.y);
    if (!check(ox, oy)) {
      verdict.holds = false;
      verdict.outputs.emplace(ox, oy);
      for (std::uint32_t n = item.word; n != 0; n = steps[n].parent)
        verdict.witness.letters.push_back(dfa.letter(steps[n].letter));
      std::reverse(verdict.witness.letters.begin(), verdict.witness.letters.end());
      break;
    }
    for (std::size_t a = 0; a < letters; ++a) {
      std::uint32_t word = 0;
      if (opts.track_witness) {
        steps.push_back({item.word, static_cast<std::uint32_t>(a)});
        word = static_cast<std::uint32_t>(steps.size() - 1);
      }
      todo.push_back({word, dfa.step(item.x, a), dfa.step(item.y, a)});
      ++verdict.stats.pairs_pushed;
    }
    r.insert({item.x, item.y});
  }
  if (opts.keep_relation) verdict.relation.assign(r.begin(), r.end());
  return verdict;
}

template <ExplicitDfa E>
auto naive_equiv(E& dfa, typename E::State x, typename E::State y, Options opts = {}) {
  return naive_check(dfa, x, y, std::equal_to<>{}, opts);
}

// ---------------------------------------------------------------------------
// Certificates.

/// R progresses to R: related states pass `check` and all their successors
/// are related.
template <ExplicitDfa E, class Check>
bool is_bisimulation(E& dfa, const std::vector<std::pair<typename E::State, typename E::State>>& rel,
                     Check&& check) {
  using S = typename E::State;
  std::unordered_set<std::pair<S, S>, detail::PairHash<S>> set(rel.begin(), rel.end());
  for (const auto& [x, y] : rel) {
    if (!check(dfa.output(x), dfa.output(y))) return false;
    for (std::size_t a = 0; a < dfa.num_letters(); ++a)
      if (!set.contains({dfa.step(x, a), dfa.step(y, a)})) return false;
  }
  return true;
}

/// The equivalence closure of R is a bisimulation.
template <ExplicitDfa E>
bool is_bisimulation_up_to_equivalence(
    E& dfa, const std::vector<std::pair<typename E::State, typename E::State>>& rel) {
  using S = typename E::State;
  std::unordered_map<S, std::uint32_t> index;
  std::vector<S> states;
  auto id = [&](const S& s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<std::uint32_t>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  DisjointSetForest classes;
  for (const auto& [x, y] : rel) {
    auto a = classes.find(id(x));
    auto b = classes.find(id(y));
    if (a != b) classes.link_by_size(a, b);
  }
  const std::size_t related = states.size();
  auto class_of = [&](const S& s) -> std::int64_t {
    auto it = index.find(s);
    if (it == index.end() || it->second >= related) return -1;
    return classes.find(it->second);
  };
  std::unordered_map<std::uint32_t, std::uint32_t> witness;  // class -> some member
  for (std::uint32_t i = 0; i < related; ++i) {
    auto root = classes.find(i);
    auto [it, fresh] = witness.try_emplace(root, i);
    if (fresh) continue;
    const S& x = states[i];
    const S& w = states[it->second];
    if (!(dfa.output(x) == dfa.output(w))) return false;
    for (std::size_t a = 0; a < dfa.num_letters(); ++a) {
      S sx = dfa.step(x, a);
      S sw = dfa.step(w, a);
      if (sx == sw) continue;
      auto cx = class_of(sx);
      auto cw = class_of(sw);
      if (cx < 0 || cw < 0 || cx != cw) return false;
    }
  }
  return true;
}

}  // namespace symkat::equiv
