#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "symkat/cli/random.hpp"
#include "symkat/construct/derivatives.hpp"
#include "symkat/construct/ilie_yu.hpp"
#include "symkat/equiv/equiv.hpp"
#include "symkat/kat/explicit.hpp"
#include "symkat/kat/guarded.hpp"
#include "symkat/kat/parser.hpp"

using namespace symkat;
using namespace symkat::kat;
using construct::Derivatives;

namespace {

bdd::Assignment alpha_p(const Workspace& ws, Atom alpha, std::uint32_t p) {
  bdd::Assignment a(ws.code().num_vars());
  for (bdd::Var v = 0; v < ws.signature().num_tests(); ++v) a.set(v, ((alpha >> v) & 1U) != 0);
  ws.code().encode(p, a);
  return a;
}

bool holds_at(Workspace& ws, bdd::BoolNode t, Atom alpha) {
  return ws.tests().eval(t, alpha_p(ws, alpha, 0));
}

/// Every guarded string with at most `bound` letters.
std::vector<GuardedString> all_strings(std::size_t tests, std::size_t letters, std::size_t bound) {
  BoundedLanguage everything(tests, letters, bound);
  for (std::size_t k = 0; k <= bound; ++k) {
    for (std::size_t idx = 0; idx < everything.table(k).size(); ++idx)
      everything.insert(everything.decode(k, idx));
  }
  return everything.members();
}

/// Acceptance of a guarded string by walks through J and N.
bool walk_accepts(Workspace& ws, const construct::EpsNfa& a, const GuardedString& u) {
  auto close = [&](std::set<std::size_t> s, Atom alpha) {
    std::vector<std::size_t> todo(s.begin(), s.end());
    while (!todo.empty()) {
      auto i = todo.back();
      todo.pop_back();
      for (std::size_t j = 0; j < a.n; ++j)
        if (holds_at(ws, a.J[i][j], alpha) && s.insert(j).second) todo.push_back(j);
    }
    return s;
  };
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.u[i]) s.insert(i);
  s = close(s, u.atoms[0]);
  for (std::size_t k = 0; k < u.letters.size(); ++k) {
    std::set<std::size_t> next;
    for (auto i : s)
      for (std::size_t j = 0; j < a.n; ++j)
        for (auto p : a.N[i][j])
          if (p == u.letters[k]) next.insert(j);
    s = close(next, u.atoms[k + 1]);
  }
  for (auto i : s)
    if (a.v[i]) return true;
  return false;
}

/// Acceptance by the epsilon-free automaton.
bool eliminated_accepts(Workspace& ws, construct::EliminatedNfa& e, const GuardedString& u) {
  std::set<std::uint32_t> s;
  for (auto i : e.initial()) s.insert(i);
  for (std::size_t k = 0; k < u.letters.size(); ++k) {
    std::set<std::uint32_t> next;
    for (auto i : s)
      for (auto j : e.sets().members(e.store().eval(e.transitions(i), alpha_p(ws, u.atoms[k], u.letters[k]))))
        next.insert(j);
    s = std::move(next);
  }
  for (auto i : s)
    if (holds_at(ws, e.output(i), u.atoms.back())) return true;
  return false;
}

bool stars_normalised(Derivatives& d, ExprId x) {
  auto& s = d.workspace().exprs();
  const auto e = s.at(x);
  if (e.kind == ExprKind::Star && d.eps(e.args[0]) == bdd::top(d.workspace().tests())) return false;
  for (auto y : e.args)
    if (!stars_normalised(d, y)) return false;
  return true;
}

Expr to_kat(Workspace& ws, ExprId x) { return parse(ws.to_string(x), ws.signature()); }

}  // namespace

TEST_CASE("symbolic epsilon") {
  Workspace ws(Signature{{"a", "b"}, {"p", "q"}});
  Derivatives d(ws);
  auto& m = ws.tests();
  CHECK(d.eps(ws.compile(parse("p", ws.signature()))) == bdd::bottom(m));
  CHECK(d.eps(ws.compile(parse("(p;q)*", ws.signature()))) == bdd::top(m));
  CHECK(d.eps(ws.compile(parse("a;(b+p)", ws.signature()))) == bdd::cnj(m, bdd::literal(m, 0), bdd::literal(m, 1)));
}

TEST_CASE("symbolic derivatives of the base cases") {
  Workspace ws(Signature{{"a", "b"}, {"p", "q", "r"}});
  Derivatives d(ws);
  auto& s = ws.exprs();
  CHECK(d.delta(ws.compile(parse("a|b", ws.signature()))) == d.expr_bdds().constant(s.zero()));
  auto dp = d.delta(ws.compile(parse("p", ws.signature())));
  for (Atom alpha = 0; alpha < 4; ++alpha) {
    CHECK(d.expr_bdds().eval(dp, alpha_p(ws, alpha, 0)) == s.one());
    CHECK(d.expr_bdds().eval(dp, alpha_p(ws, alpha, 1)) == s.zero());
    CHECK(d.expr_bdds().eval(dp, alpha_p(ws, alpha, 2)) == s.zero());
  }
  // unused code 3 is dead
  bdd::Assignment dead(ws.code().num_vars());
  ws.code().encode(3, dead);
  CHECK(d.expr_bdds().eval(dp, dead) == s.zero());
  // only letter bits are tested
  auto& m = d.expr_bdds();
  std::function<bool(bdd::Node<ExprId>)> only_code = [&](bdd::Node<ExprId> n) {
    if (m.is_leaf(n)) return true;
    return ws.code().is_letter_var(m.var(n)) && only_code(m.lo(n)) && only_code(m.hi(n));
  };
  CHECK(only_code(dp));

  CHECK(d.delta_set(ws.compile(parse("a", ws.signature()))) == d.set_bdds().constant(d.sets().empty()));
  auto sp = d.delta_set(ws.compile(parse("p", ws.signature())));
  CHECK(d.set_bdds().eval(sp, alpha_p(ws, 1, 0)) == d.sets().singleton(s.one()));
  CHECK(d.set_bdds().eval(sp, alpha_p(ws, 1, 1)) == d.sets().empty());
}

TEST_CASE("symbolic derivatives agree with explicit ones") {
  std::mt19937_64 rng(31);
  for (std::size_t tests : {2U, 3U}) {
    auto sig = cli::make_signature(tests, 2);
    for (int i = 0; i < 80; ++i) {
      auto x = cli::random_expr(rng, {tests, 2, 1 + rng() % 12});
      Workspace ws(sig);
      Derivatives d(ws);
      ExplicitKat k(sig);
      auto sx = ws.compile(x);
      auto ex = k.compile(x);
      auto e = d.eps(sx);
      auto dx = d.delta(sx);
      auto px = d.delta_set(sx);
      for (Atom alpha = 0; alpha < (Atom{1} << tests); ++alpha) {
        REQUIRE(holds_at(ws, e, alpha) == k.eps(alpha, ex));
        for (std::uint32_t p = 0; p < 2; ++p) {
          auto at = alpha_p(ws, alpha, p);
          auto explicit_d = k.to_expr(k.delta(alpha, p, ex));
          auto symbolic_d = d.expr_bdds().eval(dx, at);
          REQUIRE(ws.compile(explicit_d) == symbolic_d);
          // the partial derivatives sum to the derivative
          auto parts = d.sets().members(d.set_bdds().eval(px, at));
          auto sum = ws.exprs().sum(parts);
          REQUIRE(g_upto(to_kat(ws, sum), sig, 2) == g_upto(explicit_d, sig, 2));
        }
      }
    }
  }
}

TEST_CASE("Brzozowski automaton") {
  Workspace ws(Signature{{"a"}, {"p", "q"}});
  Derivatives d(ws);
  construct::BrzozowskiDfa dfa(d);
  auto p = ws.compile(parse("p", ws.signature()));
  CHECK(dfa.output(p) == bdd::bottom(ws.tests()));
  CHECK(dfa.store().eval(dfa.transitions(p), alpha_p(ws, 1, 0)) == ws.exprs().one());
  CHECK(equiv::symb_equiv(dfa, p, p).holds);
  auto law = ws.compile(parse("a;(!a;p)*", ws.signature()));
  auto a = ws.compile(parse("a", ws.signature()));
  CHECK(equiv::symb_equiv(dfa, law, a).holds);
  CHECK(dfa.explored() >= 2);

  construct::BrzozowskiDfa tiny(d, 1);
  auto big = ws.compile(parse("(p;q;p)*", ws.signature()));
  CHECK_THROWS_AS(equiv::symb_equiv(tiny, big, ws.compile(parse("p*", ws.signature()))),
                  construct::StateCapExceeded);
}

TEST_CASE("Antimirov automaton") {
  Workspace ws(Signature{{"a"}, {"p", "q"}});
  Derivatives d(ws);
  construct::AntimirovNfa nfa(d);
  automata::Determinised dfa(nfa);
  auto x = ws.compile(parse("(p+q)*", ws.signature()));
  auto y = ws.compile(parse("p*;(q;p*)*", ws.signature()));
  auto sx = dfa.start({x});
  CHECK(dfa.output(sx) == d.eps(x));
  CHECK(equiv::symb_equiv(dfa, sx, dfa.start({y})).holds);
  CHECK(equiv::dsf_equiv(dfa, sx, dfa.start({y})).holds);
  CHECK_FALSE(equiv::symb_equiv(dfa, sx, dfa.start({ws.compile(parse("p*", ws.signature()))})).holds);
}

TEST_CASE("star normalisation examples") {
  Workspace ws(Signature{{"a", "b"}, {"p", "q"}});
  Derivatives d(ws);
  auto c = [&](const char* text) { return ws.compile(parse(text, ws.signature())); };
  CHECK(star_normalise(d, c("(a+p)*")) == c("p*"));
  CHECK(star_normalise(d, c("(p*+q)*")) == c("(p+q)*"));
  CHECK(star_normalise(d, c("((1+p);(1+q))*")) == c("(p+q)*"));
  auto guarded = c("((a+p);(b+q))*");
  CHECK(star_normalise(d, guarded) == guarded);
  CHECK(star_normalise(d, c("p;q")) == c("p;q"));
  CHECK(star_normalise(d, c("(p*;q*)*")) == c("(p+q)*"));
}

TEST_CASE("star normalisation preserves bounded semantics") {
  std::mt19937_64 rng(41);
  auto sig = cli::make_signature(2, 2);
  for (int i = 0; i < 200; ++i) {
    auto x = cli::random_expr(rng, {2, 2, 1 + rng() % 12});
    Workspace ws(sig);
    Derivatives d(ws);
    auto n = star_normalise(d, ws.compile(x));
    CHECK(stars_normalised(d, n));
    REQUIRE_MESSAGE(g_upto(to_kat(ws, n), sig, 3) == g_upto(x, sig, 3), to_string(x, sig));
  }
}

TEST_CASE("Ilie and Yu construction") {
  Workspace ws(Signature{{"a", "b"}, {"p", "q"}});
  auto& m = ws.tests();
  auto c = [&](const char* text) { return ws.compile(parse(text, ws.signature())); };

  auto phi = construct::ilie_yu(ws, c("a&b"));
  CHECK(phi.n == 2);
  CHECK(phi.u == std::vector<bool>{true, false});
  CHECK(phi.v == std::vector<bool>{false, true});
  CHECK(phi.J[0][1] == bdd::cnj(m, bdd::literal(m, 0), bdd::literal(m, 1)));
  for (const auto& row : phi.N)
    for (const auto& cell : row) CHECK(cell.empty());

  auto p = construct::ilie_yu(ws, c("p"));
  CHECK(p.n == 2);
  CHECK(p.N[0][1] == std::vector<std::uint32_t>{0});
  CHECK(p.J[0][1] == bdd::bottom(m));

  auto pq = construct::ilie_yu(ws, c("p;q"));
  CHECK(pq.n == 3);
  auto star = construct::ilie_yu(ws, c("(p;q)*"));
  CHECK(star.n == pq.n + 1);
  for (auto* a : {&phi, &p, &pq, &star}) {
    CHECK(std::count(a->u.begin(), a->u.end(), true) == 1);
    CHECK(std::count(a->v.begin(), a->v.end(), true) == 1);
  }
}

TEST_CASE("test closure") {
  bdd::BoolManager m(2);
  auto z = bdd::bottom(m);
  std::vector<std::vector<bdd::BoolNode>> J(3, std::vector<bdd::BoolNode>(3, z));
  auto star = construct::test_closure(m, J);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(star[i][j] == (i == j ? bdd::top(m) : z));
  J[0][1] = bdd::literal(m, 0);
  J[1][2] = bdd::literal(m, 1);
  J[2][0] = bdd::top(m);
  star = construct::test_closure(m, J);
  CHECK(star[0][2] == bdd::cnj(m, bdd::literal(m, 0), bdd::literal(m, 1)));
  CHECK(star[2][1] == bdd::literal(m, 0));
  CHECK(star[1][0] == bdd::literal(m, 1));
}

TEST_CASE("epsilon elimination of a test") {
  Workspace ws(Signature{{"a", "b"}, {"p"}});
  auto phi = ws.compile(parse("a|!b", ws.signature()));
  construct::EliminatedNfa e(ws, construct::ilie_yu(ws, phi));
  CHECK(e.initial() == std::vector<std::uint32_t>{0});
  CHECK(e.output(0) == ws.exprs().at(phi).test);
  CHECK(e.transitions(0) == e.store().constant(e.sets().empty()));
}

TEST_CASE("Ilie and Yu automata recognise the bounded language") {
  std::mt19937_64 rng(51);
  auto sig = cli::make_signature(2, 2);
  auto strings = all_strings(2, 2, 3);
  for (int i = 0; i < 60; ++i) {
    auto x = cli::random_expr(rng, {2, 2, 1 + rng() % 10});
    auto g = g_upto(x, sig, 3);
    for (bool normalise : {false, true}) {
      Workspace ws(sig);
      Derivatives d(ws);
      auto id = ws.compile(x);
      if (normalise) id = star_normalise(d, id);
      auto a = construct::ilie_yu(ws, id);
      construct::EliminatedNfa e(ws, a);
      for (const auto& u : strings) {
        REQUIRE_MESSAGE(walk_accepts(ws, a, u) == g.contains(u), to_string(x, sig));
        REQUIRE_MESSAGE(eliminated_accepts(ws, e, u) == g.contains(u), to_string(x, sig));
      }
    }
  }
}
