#include "symkat/kat/guarded.hpp"

#include <algorithm>
#include <stdexcept>

namespace symkat::kat {

std::optional<GuardedString> gs_concat(const GuardedString& u, const GuardedString& v) {
  if (u.atoms.empty() || v.atoms.empty() || u.atoms.back() != v.atoms.front()) return std::nullopt;
  GuardedString w = u;
  w.atoms.insert(w.atoms.end(), v.atoms.begin() + 1, v.atoms.end());
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

// A string with k letters has index
//   ((alpha_1 * |Sigma| + p_1) * |At| + alpha_2) ... * |At| + alpha_{k+1},
// so its suffix after the first atom occupies the low digits.
BoundedLanguage::BoundedLanguage(std::size_t num_tests, std::size_t num_letters,
                                 std::size_t bound)
    : atoms_(std::size_t{1} << num_tests),
      letters_(num_letters),
      bound_(bound),
      radix_(atoms_ * num_letters) {
  if (num_tests > 6 || power(radix_, bound) * atoms_ > (std::size_t{1} << 26))
    throw std::invalid_argument("bounded language too large");
  for (std::size_t k = 0; k <= bound; ++k) tables_.emplace_back(atoms_ * power(radix_, k), 0);
}

std::size_t BoundedLanguage::index(const GuardedString& u) const {
  std::size_t idx = u.atoms.at(0);
  for (std::size_t i = 0; i < u.letters.size(); ++i)
    idx = (idx * letters_ + u.letters[i]) * atoms_ + u.atoms.at(i + 1);
  return idx;
}

GuardedString BoundedLanguage::decode(std::size_t k, std::size_t idx) const {
  GuardedString u;
  u.atoms.resize(k + 1);
  u.letters.resize(k);
  for (std::size_t i = k; i > 0; --i) {
    u.atoms[i] = idx % atoms_;
    idx /= atoms_;
    u.letters[i - 1] = static_cast<std::uint32_t>(idx % letters_);
    idx /= letters_;
  }
  u.atoms[0] = idx;
  return u;
}

bool BoundedLanguage::contains(const GuardedString& u) const {
  if (u.size() > bound_ || u.atoms.size() != u.size() + 1) return false;
  return tables_[u.size()][index(u)] != 0;
}

void BoundedLanguage::insert(const GuardedString& u) {
  if (u.size() > bound_) throw std::out_of_range("guarded string longer than the bound");
  tables_[u.size()][index(u)] = 1;
}

std::size_t BoundedLanguage::count() const {
  std::size_t n = 0;
  for (const auto& t : tables_) n += static_cast<std::size_t>(std::count(t.begin(), t.end(), 1));
  return n;
}

std::vector<GuardedString> BoundedLanguage::members() const {
  std::vector<GuardedString> out;
  for (std::size_t k = 0; k <= bound_; ++k)
    for (std::size_t i = 0; i < tables_[k].size(); ++i)
      if (tables_[k][i]) out.push_back(decode(k, i));
  return out;
}

BoundedLanguage BoundedLanguage::atoms(std::size_t num_tests, std::size_t num_letters,
                                       std::size_t bound) {
  BoundedLanguage l(num_tests, num_letters, bound);
  std::fill(l.tables_[0].begin(), l.tables_[0].end(), 1);
  return l;
}

BoundedLanguage& BoundedLanguage::operator|=(const BoundedLanguage& other) {
  for (std::size_t k = 0; k <= bound_; ++k)
    for (std::size_t i = 0; i < tables_[k].size(); ++i) tables_[k][i] |= other.tables_[k][i];
  return *this;
}

BoundedLanguage BoundedLanguage::concat(const BoundedLanguage& other) const {
  BoundedLanguage out(*this);
  for (auto& t : out.tables_) std::fill(t.begin(), t.end(), 0);
  for (std::size_t k1 = 0; k1 <= bound_; ++k1) {
    const auto& left = tables_[k1];
    for (std::size_t k2 = 0; k1 + k2 <= bound_; ++k2) {
      const auto& right = other.tables_[k2];
      auto& dst = out.tables_[k1 + k2];
      const std::size_t block = power(radix_, k2);
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (!left[i]) continue;
        std::size_t beta = i % atoms_;
        const std::uint8_t* src = right.data() + beta * block;
        std::uint8_t* to = dst.data() + i * block;
        for (std::size_t j = 0; j < block; ++j) to[j] |= src[j];
      }
    }
  }
  return out;
}

BoundedLanguage BoundedLanguage::star() const {
  BoundedLanguage acc(*this);
  for (auto& t : acc.tables_) std::fill(t.begin(), t.end(), 0);
  std::fill(acc.tables_[0].begin(), acc.tables_[0].end(), 1);
  for (;;) {
    BoundedLanguage next = concat(acc);
    next |= acc;
    if (next == acc) return acc;
    acc = std::move(next);
  }
}

bool BoundedLanguage::subset_of(const BoundedLanguage& other) const {
  for (std::size_t k = 0; k <= bound_; ++k)
    for (std::size_t i = 0; i < tables_[k].size(); ++i)
      if (tables_[k][i] && !other.tables_[k][i]) return false;
  return true;
}

namespace {

BoundedLanguage semantics(const KatExpr& x, const Signature& sig, std::size_t n) {
  using K = KatExpr::Kind;
  const std::size_t nt = sig.num_tests();
  const std::size_t nl = sig.num_letters();
  switch (x.kind) {
    case K::Test: {
      BoundedLanguage l(nt, nl, n);
      for (std::size_t a = 0; a < l.num_atoms(); ++a)
        if (atom_sat(a, *x.test)) l.table(0)[a] = 1;
      return l;
    }
    case K::Letter: {
      BoundedLanguage l(nt, nl, n);
      if (n == 0) return l;
      for (Atom a = 0; a < l.num_atoms(); ++a)
        for (Atom b = 0; b < l.num_atoms(); ++b) l.insert({{a, b}, {x.letter}});
      return l;
    }
    case K::Sum: {
      BoundedLanguage l = semantics(*x.lhs, sig, n);
      l |= semantics(*x.rhs, sig, n);
      return l;
    }
    case K::Prod: return semantics(*x.lhs, sig, n).concat(semantics(*x.rhs, sig, n));
    case K::Star: return semantics(*x.lhs, sig, n).star();
  }
  throw std::logic_error("g_upto: bad kind");
}

}  // namespace

BoundedLanguage g_upto(const Expr& x, const Signature& sig, std::size_t n) {
  return semantics(*x, sig, n);
}

bool gs_member(const Expr& x, const Signature& sig, const GuardedString& u) {
  return g_upto(x, sig, u.size()).contains(u);
}

}  // namespace symkat::kat
