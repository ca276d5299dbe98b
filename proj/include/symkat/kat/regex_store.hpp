#pragma once

// Hash-consed regular expressions over letters and an abstract algebra of
// tests. Every constructor normalises:
//   sums      flattened, sorted by identifier, deduplicated, 0 dropped
//   products  right-associated, 1 dropped, 0 absorbing
//   stars     (x*)* = x*, and phi* = 1 for tests
// When the test algebra can compute joins and meets, tests are merged in
// sums (phi + psi = phi|psi) and in adjacent product factors (phi;psi = phi&psi).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symkat/bdd/manager.hpp"

namespace symkat::kat {

struct ExprId {
  std::uint32_t id = 0;
  friend constexpr bool operator==(ExprId, ExprId) = default;
  friend constexpr auto operator<=>(ExprId, ExprId) = default;
};

enum class ExprKind : std::uint8_t { Test, Letter, Sum, Prod, Star };

}  // namespace symkat::kat

template <>
struct std::hash<symkat::kat::ExprId> {
  std::size_t operator()(symkat::kat::ExprId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.id);
  }
};

namespace symkat::kat {

/// Algebra requirements:
///   Test zero(), one(); bool is_zero(Test), is_one(Test);
///   std::size_t hash(Test); bool equal(Test, Test);
///   std::optional<Test> join(Test, Test), meet(Test, Test)   (nullopt: no merging)
template <class Algebra>
class RegexStore {
 public:
  using Test = typename Algebra::Test;

  struct Entry {
    ExprKind kind;
    Test test{};
    std::uint32_t letter = 0;
    std::vector<ExprId> args;  // Sum: summands; Prod: {head, tail}; Star: {body}
  };

  explicit RegexStore(Algebra algebra) : algebra_(std::move(algebra)) {
    zero_ = test(algebra_.zero());
    one_ = test(algebra_.one());
  }

  RegexStore(const RegexStore&) = delete;
  RegexStore& operator=(const RegexStore&) = delete;

  Algebra& algebra() { return algebra_; }
  const Entry& at(ExprId x) const { return entries_[x.id]; }
  ExprKind kind(ExprId x) const { return entries_[x.id].kind; }
  std::size_t size() const { return entries_.size(); }

  ExprId zero() const { return zero_; }
  ExprId one() const { return one_; }

  ExprId test(Test t) { return intern(Entry{ExprKind::Test, t, 0, {}}); }
  ExprId letter(std::uint32_t p) { return intern(Entry{ExprKind::Letter, Test{}, p, {}}); }

  ExprId sum(ExprId a, ExprId b) { return sum(std::vector<ExprId>{a, b}); }

  ExprId sum(const std::vector<ExprId>& xs) {
    std::vector<ExprId> flat;
    std::optional<Test> merged;
    bool mergeable = true;
    auto add = [&](ExprId x) {
      const Entry& e = at(x);
      if (e.kind == ExprKind::Test) {
        if (algebra_.is_zero(e.test)) return;
        if (mergeable) {
          if (!merged) {
            merged = e.test;
            return;
          }
          if (auto j = algebra_.join(*merged, e.test)) {
            merged = *j;
            return;
          }
          mergeable = false;
          flat.push_back(test(*merged));
          merged.reset();
        }
      }
      flat.push_back(x);
    };
    for (ExprId x : xs) {
      if (kind(x) == ExprKind::Sum) {
        std::vector<ExprId> inner = at(x).args;
        for (ExprId y : inner) add(y);
      } else {
        add(x);
      }
    }
    if (merged) flat.push_back(test(*merged));
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return zero_;
    if (flat.size() == 1) return flat.front();
    return intern(Entry{ExprKind::Sum, Test{}, 0, std::move(flat)});
  }

  ExprId prod(ExprId a, ExprId b) {
    if (a == zero_ || b == zero_) return zero_;
    if (a == one_) return b;
    if (b == one_) return a;
    const Entry& ea = at(a);
    if (ea.kind == ExprKind::Prod) {
      ExprId head = ea.args[0];
      ExprId tail = ea.args[1];
      return prod(head, prod(tail, b));
    }
    if (ea.kind == ExprKind::Test) {
      const Entry& eb = at(b);
      if (eb.kind == ExprKind::Test) {
        if (auto m = algebra_.meet(ea.test, eb.test)) return test(*m);
      } else if (eb.kind == ExprKind::Prod && kind(eb.args[0]) == ExprKind::Test) {
        ExprId tail = eb.args[1];
        if (auto m = algebra_.meet(ea.test, at(eb.args[0]).test)) return prod(test(*m), tail);
      }
    }
    return intern(Entry{ExprKind::Prod, Test{}, 0, {a, b}});
  }

  /// Product of a sequence, right-associated.
  ExprId prod(const std::vector<ExprId>& xs) {
    ExprId acc = one_;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = prod(*it, acc);
    return acc;
  }

  ExprId star(ExprId a) {
    ExprKind k = kind(a);
    if (k == ExprKind::Star) return a;
    if (k == ExprKind::Test) return one_;
    return intern(Entry{ExprKind::Star, Test{}, 0, {a}});
  }

  bool is_test(ExprId x) const { return kind(x) == ExprKind::Test; }

 private:
  struct EntryHash {
    const RegexStore* self;
    std::size_t operator()(const Entry& e) const {
      std::uint64_t h = static_cast<std::uint64_t>(e.kind) * 0x100000001b3ULL + e.letter;
      if (e.kind == ExprKind::Test) h ^= self->algebra_.hash(e.test) * 0x9e3779b97f4a7c15ULL;
      for (ExprId x : e.args) h = bdd::detail::mix(h ^ x.id);
      return static_cast<std::size_t>(bdd::detail::mix(h));
    }
  };
  struct EntryEq {
    const RegexStore* self;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.kind != b.kind || a.letter != b.letter || a.args != b.args) return false;
      return a.kind != ExprKind::Test || self->algebra_.equal(a.test, b.test);
    }
  };

  ExprId intern(Entry e) {
    if (auto it = index_.find(e); it != index_.end()) return it->second;
    ExprId id{static_cast<std::uint32_t>(entries_.size())};
    entries_.push_back(e);
    index_.emplace(std::move(e), id);
    return id;
  }

  Algebra algebra_;
  std::vector<Entry> entries_;
  std::unordered_map<Entry, ExprId, EntryHash, EntryEq> index_{16, EntryHash{this}, EntryEq{this}};
  ExprId zero_;
  ExprId one_;
};

}  // namespace symkat::kat
