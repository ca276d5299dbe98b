#pragma once

#include <cstdint>
#include <vector>

namespace symkat::equiv {

/// Disjoint set forest over dense identifiers. The forest is a partial map
/// element -> element; roots are the elements without a parent. `find`
/// compresses paths by halving.
class DisjointSetForest {
 public:
  std::uint32_t find(std::uint32_t x) {
    ensure(x);
    for (;;) {
      std::uint32_t y = parent_[x];
      if (y == x) return x;
      std::uint32_t z = parent_[y];
      if (z == y) return y;
      parent_[x] = z;
      x = z;
    }
  }

  /// Adds the link from -> to; both must be roots.
  void link(std::uint32_t from, std::uint32_t to) {
    ensure(from);
    ensure(to);
    parent_[from] = to;
    size_[to] += size_[from];
  }

  /// Links the smaller of two roots under the larger; returns the new root.
  std::uint32_t link_by_size(std::uint32_t a, std::uint32_t b) {
    ensure(a);
    ensure(b);
    if (size_[a] > size_[b]) std::swap(a, b);
    link(a, b);
    return b;
  }

  bool same(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

  /// Parent of x, or x itself for a root.
  std::uint32_t parent(std::uint32_t x) const { return x < parent_.size() ? parent_[x] : x; }
  std::uint32_t class_size(std::uint32_t root) const {
    return root < size_.size() ? size_[root] : 1;
  }
  /// Identifiers touched so far are exactly [0, extent()).
  std::size_t extent() const { return parent_.size(); }

 private:
  void ensure(std::uint32_t x) {
    while (parent_.size() <= x) {
      parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
      size_.push_back(1);
    }
  }

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace symkat::equiv
