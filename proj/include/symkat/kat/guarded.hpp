#pragma once

// Guarded strings and the bounded language semantics G_upto. Intended as a
// ground truth for small signatures only.

#include <cstdint>
#include <optional>
#include <vector>

#include "symkat/kat/syntax.hpp"

namespace symkat::kat {

/// alpha_1 p_1 alpha_2 ... p_n alpha_{n+1}
struct GuardedString {
  std::vector<Atom> atoms;
  std::vector<std::uint32_t> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const GuardedString&, const GuardedString&) = default;
};

/// Fusion product; undefined (nullopt) unless the shared atoms coincide.
std::optional<GuardedString> gs_concat(const GuardedString& u, const GuardedString& v);

/// A set of guarded strings with at most `bound` letters, stored as one
/// membership table per letter count.
class BoundedLanguage {
 public:
  BoundedLanguage(std::size_t num_tests, std::size_t num_letters, std::size_t bound);

  std::size_t bound() const { return bound_; }
  std::size_t num_atoms() const { return atoms_; }
  std::size_t num_letters() const { return letters_; }

  bool contains(const GuardedString& u) const;
  void insert(const GuardedString& u);
  std::size_t count() const;
  /// Every member, shortest first.
  std::vector<GuardedString> members() const;

  /// All atoms.
  static BoundedLanguage atoms(std::size_t num_tests, std::size_t num_letters, std::size_t bound);

  BoundedLanguage& operator|=(const BoundedLanguage& other);
  BoundedLanguage concat(const BoundedLanguage& other) const;
  BoundedLanguage star() const;
  bool subset_of(const BoundedLanguage& other) const;

  friend bool operator==(const BoundedLanguage&, const BoundedLanguage&) = default;

  std::size_t index(const GuardedString& u) const;
  GuardedString decode(std::size_t k, std::size_t idx) const;
  std::vector<std::uint8_t>& table(std::size_t k) { return tables_[k]; }
  const std::vector<std::uint8_t>& table(std::size_t k) const { return tables_[k]; }

 private:
  std::size_t atoms_;
  std::size_t letters_;
  std::size_t bound_;
  std::size_t radix_;  // atoms * letters
  std::vector<std::vector<std::uint8_t>> tables_;
};

/// Guarded strings of G(x) with at most n letters.
BoundedLanguage g_upto(const Expr& x, const Signature& sig, std::size_t n);

bool gs_member(const Expr& x, const Signature& sig, const GuardedString& u);

}  // namespace symkat::kat
