#pragma once

// Interned finite sets, usable as BDD leaves and map keys.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "symkat/bdd/manager.hpp"

namespace symkat::automata {

struct SetId {
  std::uint32_t id = 0;
  friend constexpr bool operator==(SetId, SetId) = default;
  friend constexpr auto operator<=>(SetId, SetId) = default;
};

}  // namespace symkat::automata

template <>
struct std::hash<symkat::automata::SetId> {
  std::size_t operator()(symkat::automata::SetId s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id);
  }
};

namespace symkat::automata {

/// Hash-consed sorted sets of T. SetId{0} is always the empty set.
template <class T, class Less = std::less<T>>
class SetStore {
 public:
  SetStore() { intern({}); }

  SetId empty() const { return SetId{0}; }
  SetId singleton(const T& x) { return intern({x}); }

  /// Interns an arbitrary sequence; sorts and deduplicates.
  SetId make(std::vector<T> members) {
    std::sort(members.begin(), members.end(), Less{});
    members.erase(std::unique(members.begin(), members.end(),
                              [](const T& a, const T& b) { return !Less{}(a, b) && !Less{}(b, a); }),
                  members.end());
    return intern(std::move(members));
  }

  const std::vector<T>& members(SetId s) const { return sets_[s.id]; }
  std::size_t size() const { return sets_.size(); }

  SetId unite(SetId a, SetId b) {
    if (a == b || b == empty()) return a;
    if (a == empty()) return b;
    if (b < a) std::swap(a, b);
    auto key = std::uint64_t{a.id} << 32 | b.id;
    if (auto it = unions_.find(key); it != unions_.end()) return it->second;
    const auto& xs = sets_[a.id];
    const auto& ys = sets_[b.id];
    std::vector<T> merged;
    merged.reserve(xs.size() + ys.size());
    std::set_union(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(merged), Less{});
    SetId r = intern(std::move(merged));
    unions_.emplace(key, r);
    return r;
  }

  bool subset(SetId a, SetId b) const {
    const auto& xs = sets_[a.id];
    const auto& ys = sets_[b.id];
    return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end(), Less{});
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<T>& v) const {
      std::uint64_t h = v.size();
      for (const auto& x : v) h = bdd::detail::mix(h ^ std::hash<T>{}(x));
      return static_cast<std::size_t>(h);
    }
  };

  SetId intern(std::vector<T> members) {
    if (auto it = index_.find(members); it != index_.end()) return it->second;
    SetId id{static_cast<std::uint32_t>(sets_.size())};
    sets_.push_back(members);
    index_.emplace(std::move(members), id);
    return id;
  }

  std::vector<std::vector<T>> sets_;
  std::unordered_map<std::vector<T>, SetId, VecHash> index_;
  std::unordered_map<std::uint64_t, SetId> unions_;
};

}  // namespace symkat::automata
