#include "symkat/kat/symbolic.hpp"

#include <memory>
#include <stdexcept>

namespace symkat::kat {

LetterCode::LetterCode(std::size_t num_tests, std::size_t num_letters)
    : num_tests_(num_tests), num_letters_(num_letters), bits_(0) {
  while ((std::size_t{1} << bits_) < num_letters_) ++bits_;
  if (num_tests_ + bits_ > 63) throw std::invalid_argument("too many tests and letters");
}

std::optional<std::uint32_t> LetterCode::decode(const bdd::Assignment& a) const {
  std::uint32_t p = 0;
  for (std::size_t k = 0; k < bits_; ++k) p = p << 1 | (a[bit_var(k)] ? 1U : 0U);
  if (p >= num_letters_) return std::nullopt;
  return p;
}

void LetterCode::encode(std::uint32_t p, bdd::Assignment& a) const {
  for (std::size_t k = 0; k < bits_; ++k) a.set(bit_var(k), bit(p, k));
}

namespace {

std::unique_ptr<bdd::BoolManager> make_tests(const LetterCode& code) {
  return std::make_unique<bdd::BoolManager>(code.num_vars());
}

}  // namespace

Workspace::Workspace(Signature sig)
    : sig_(std::move(sig)),
      code_(sig_.num_tests(), sig_.num_letters()),
      tests_(make_tests(code_)),
      exprs_(BddTests{tests_.get()}) {}

bdd::BoolNode Workspace::compile_test(const Test& t) {
  using K = TestExpr::Kind;
  auto& m = *tests_;
  switch (t->kind) {
    case K::Var:
      if (t->var >= sig_.num_tests()) throw std::invalid_argument("unknown test variable");
      return bdd::literal(m, t->var);
    case K::True: return bdd::top(m);
    case K::False: return bdd::bottom(m);
    case K::And: return bdd::cnj(m, compile_test(t->lhs), compile_test(t->rhs));
    case K::Or: return bdd::dsj(m, compile_test(t->lhs), compile_test(t->rhs));
    case K::Not: return bdd::neg(m, compile_test(t->lhs));
  }
  throw std::logic_error("compile_test: bad kind");
}

ExprId Workspace::compile(const Expr& e) {
  using K = KatExpr::Kind;
  switch (e->kind) {
    case K::Test: return exprs_.test(compile_test(e->test));
    case K::Letter:
      if (e->letter >= sig_.num_letters()) throw std::invalid_argument("unknown letter");
      return exprs_.letter(e->letter);
    case K::Sum: return exprs_.sum(compile(e->lhs), compile(e->rhs));
    case K::Prod: {
      ExprId l = compile(e->lhs);
      return exprs_.prod(l, compile(e->rhs));
    }
    case K::Star: return exprs_.star(compile(e->lhs));
  }
  throw std::logic_error("compile: bad kind");
}

std::string Workspace::var_name(bdd::Var v) const {
  if (v < sig_.num_tests()) return sig_.tests[v];
  return "#" + std::to_string(v - sig_.num_tests());
}

std::string Workspace::test_string(bdd::BoolNode t) {
  auto& m = *tests_;
  if (t == bdd::top(m)) return "1";
  if (t == bdd::bottom(m)) return "0";
  std::vector<std::string> cubes;
  std::string cube;
  auto walk = [&](auto&& self, bdd::BoolNode n, std::string prefix) -> void {
    if (m.is_leaf(n)) {
      if (m.value(n)) cubes.push_back(prefix.empty() ? "1" : prefix);
      return;
    }
    std::string name = var_name(m.var(n));
    std::string sep = prefix.empty() ? "" : "&";
    self(self, m.lo(n), prefix + sep + "!" + name);
    self(self, m.hi(n), prefix + sep + name);
  };
  walk(walk, t, "");
  std::string out;
  for (std::size_t i = 0; i < cubes.size(); ++i) out += (i ? "|" : "") + cubes[i];
  return out;
}

std::string Workspace::render(ExprId x, int context) {
  auto is_test = [&](ExprId y) { return exprs_.kind(y) == ExprKind::Test; };
  const auto& e = exprs_.at(x);
  std::string s;
  int level = 3;
  switch (e.kind) {
    case ExprKind::Test: {
      s = test_string(e.test);
      bool compound = s.find_first_of("&|") != std::string::npos;
      if (compound) level = s.find('|') != std::string::npos ? 0 : 1;
      break;
    }
    case ExprKind::Letter: s = sig_.letters.at(e.letter); break;
    case ExprKind::Sum:
      level = 0;
      for (std::size_t i = 0; i < e.args.size(); ++i)
        s += (i ? " + " : "") + render(e.args[i], 1);
      break;
    case ExprKind::Prod:
      level = 1;
      s = render(e.args[0], 2) + ";" + render(e.args[1], is_test(e.args[1]) ? 2 : 1);
      break;
    case ExprKind::Star:
      level = 2;
      s = render(e.args[0], 3) + "*";
      break;
  }
  return level < context ? "(" + s + ")" : s;
}

std::string Workspace::to_string(ExprId x) { return render(x, 0); }

}  // namespace symkat::kat
