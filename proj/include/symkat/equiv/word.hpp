#pragma once

// Symbolic words: each letter is a conjunction of signed variable literals,
// the least requirement on a concrete letter of 2^Vars.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symkat/bdd/manager.hpp"

namespace symkat::equiv {

struct Literal {
  bdd::Var var = 0;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Letter = std::vector<Literal>;

struct SymbolicWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const SymbolicWord&, const SymbolicWord&) = default;
};

using VarNamer = std::function<std::string(bdd::Var)>;

/// `[+a -b];[+a]`; the empty word renders as `<empty>`.
inline std::string render(const SymbolicWord& w, const VarNamer& name) {
  if (w.empty()) return "<empty>";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ';';
    out += '[';
    for (std::size_t j = 0; j < w.letters[i].size(); ++j) {
      if (j) out += ' ';
      out += w.letters[i][j].positive ? '+' : '-';
      out += name(w.letters[i][j].var);
    }
    out += ']';
  }
  return out;
}

inline bool satisfies(const bdd::Assignment& a, const Letter& letter) {
  for (const auto& lit : letter)
    if (a[lit.var] != lit.positive) return false;
  return true;
}

/// Concrete words matching `w`: unconstrained bits are enumerated exhaustively
/// while there are at most log2(cap) of them, and sampled otherwise.
inline std::vector<std::vector<bdd::Assignment>> concretisations(const SymbolicWord& w,
                                                                 std::size_t num_vars,
                                                                 std::size_t cap = 1024,
                                                                 std::uint64_t seed = 1) {
  struct Slot {
    std::size_t letter;
    bdd::Var var;
  };
  std::vector<Slot> free;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    std::vector<bool> fixed(num_vars, false);
    for (const auto& lit : w.letters[i]) fixed.at(lit.var) = true;
    for (bdd::Var v = 0; v < num_vars; ++v)
      if (!fixed[v]) free.push_back({i, v});
  }
  auto build = [&](auto&& bit) {
    std::vector<bdd::Assignment> word(w.letters.size(), bdd::Assignment(num_vars));
    for (std::size_t i = 0; i < w.letters.size(); ++i)
      for (const auto& lit : w.letters[i]) word[i].set(lit.var, lit.positive);
    for (std::size_t k = 0; k < free.size(); ++k) word[free[k].letter].set(free[k].var, bit(k));
    return word;
  };
  std::vector<std::vector<bdd::Assignment>> out;
  if (free.size() < 63 && (std::uint64_t{1} << free.size()) <= cap) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m)
      out.push_back(build([&](std::size_t k) { return ((m >> k) & 1U) != 0; }));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < cap; ++s) {
      std::vector<bool> bits(free.size());
      for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = (rng() & 1U) != 0;
      out.push_back(build([&](std::size_t k) { return static_cast<bool>(bits[k]); }));
    }
  }
  return out;
}

}  // namespace symkat::equiv
