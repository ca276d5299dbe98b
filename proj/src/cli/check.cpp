#include "symkat/cli/check.hpp"

#include <chrono>
#include <stdexcept>

#include "symkat/automata/symbolic.hpp"
#include "symkat/construct/derivatives.hpp"
#include "symkat/construct/ilie_yu.hpp"

namespace symkat::cli {

Construction parse_construction(std::string_view s) {
  if (s == "brz") return Construction::Brz;
  if (s == "ant") return Construction::Ant;
  if (s == "iy") return Construction::Iy;
  throw std::invalid_argument("unknown construction '" + std::string(s) + "'");
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "naive") return Algorithm::Naive;
  if (s == "symb") return Algorithm::Symb;
  if (s == "dsf") return Algorithm::Dsf;
  throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

Mode parse_mode(std::string_view s) {
  if (s == "equiv") return Mode::Equiv;
  if (s == "incl") return Mode::Incl;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

std::string_view name(Construction c) {
  switch (c) {
    case Construction::Brz: return "brz";
    case Construction::Ant: return "ant";
    case Construction::Iy: return "iy";
  }
  return "?";
}

std::string_view name(Algorithm a) {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::Symb: return "symb";
    case Algorithm::Dsf: return "dsf";
  }
  return "?";
}

std::string_view name(Mode m) { return m == Mode::Equiv ? "equiv" : "incl"; }

std::string describe_witness(const kat::Workspace& ws, const equiv::SymbolicWord& w) {
  if (w.empty()) return "<empty>";
  const auto& code = ws.code();
  const auto& sig = ws.signature();
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ';';
    out += '[';
    std::string body;
    std::vector<int> bits(code.bits(), -1);
    for (const auto& lit : w.letters[i]) {
      if (code.is_letter_var(lit.var)) {
        bits[lit.var - code.num_tests()] = lit.positive ? 1 : 0;
        continue;
      }
      if (!body.empty()) body += ' ';
      body += (lit.positive ? "+" : "-") + ws.var_name(lit.var);
    }
    std::vector<std::string> matching;
    for (std::uint32_t p = 0; p < sig.num_letters(); ++p) {
      bool ok = true;
      for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] >= 0 && code.bit(p, k) != (bits[k] == 1)) ok = false;
      if (ok) matching.push_back(sig.letters[p]);
    }
    std::string letter;
    if (matching.size() == 1) {
      letter = matching.front();
    } else if (matching.size() < sig.num_letters()) {
      letter = "{";
      for (std::size_t k = 0; k < matching.size(); ++k) letter += (k ? "," : "") + matching[k];
      letter += "}";
    }
    if (!letter.empty()) body += (body.empty() ? "" : " ") + letter;
    out += body + ']';
  }
  return out;
}

namespace {

template <automata::SymbolicDfa D>
CheckResult run(D& dfa, typename D::State x, typename D::State y, kat::Workspace& ws,
                const CheckConfig& cfg, bool inclusion) {
  using Out = typename D::Output;
  auto& tests = ws.tests();
  auto leq = [&](Out a, Out b) { return inclusion ? bdd::implies(tests, a, b) : a == b; };
  equiv::Options opts{cfg.track_witness, cfg.verify_certificate};
  equiv::Verdict<typename D::State, Out> v;
  switch (cfg.algorithm) {
    case Algorithm::Naive: {
      equiv::ExplicitView view(dfa, cfg.naive_cap);
      v = equiv::naive_check(view, x, y, leq, opts);
      break;
    }
    case Algorithm::Symb: v = equiv::symb_check(dfa, x, y, leq, opts); break;
    case Algorithm::Dsf:
      if (inclusion) throw std::logic_error("dsf inclusion must be reduced to equivalence");
      v = equiv::dsf_equiv(dfa, x, y, opts);
      break;
  }
  CheckResult r;
  r.holds = v.holds;
  r.stats = v.stats;
  r.witness = v.witness;
  if (!v.holds) r.witness_text = describe_witness(ws, v.witness);
  if (cfg.verify_certificate && v.holds) {
    equiv::ExplicitView view(dfa, cfg.naive_cap);
    if (cfg.algorithm == Algorithm::Dsf)
      r.certificate = equiv::is_bisimulation_up_to_equivalence(view, v.relation);
    else
      r.certificate = equiv::is_bisimulation(view, v.relation, leq);
  }
  return r;
}

}  // namespace

CheckResult check(const kat::Signature& sig, const kat::Expr& e1, const kat::Expr& e2,
                  const CheckConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  kat::Workspace ws(sig);
  if (cfg.algorithm == Algorithm::Naive &&
      (ws.code().num_vars() >= 63 || (std::size_t{1} << ws.code().num_vars()) > cfg.naive_cap))
    throw std::invalid_argument("naive algorithm: alphabet of 2^" +
                                std::to_string(ws.code().num_vars()) +
                                " letters exceeds the cap of " + std::to_string(cfg.naive_cap));
  kat::ExprId x = ws.compile(e1);
  kat::ExprId y = ws.compile(e2);
  bool inclusion = cfg.mode == Mode::Incl;
  if (inclusion && cfg.algorithm == Algorithm::Dsf) {
    x = ws.exprs().sum(x, y);
    inclusion = false;
  }
  construct::Derivatives d(ws);
  CheckResult r;
  switch (cfg.construction) {
    case Construction::Brz: {
      construct::BrzozowskiDfa dfa(d, cfg.state_cap);
      r = run(dfa, x, y, ws, cfg, inclusion);
      r.states = dfa.explored();
      break;
    }
    case Construction::Ant: {
      construct::AntimirovNfa nfa(d, cfg.state_cap);
      automata::Determinised dfa(nfa);
      auto sx = dfa.start({x});
      auto sy = dfa.start({y});
      r = run(dfa, sx, sy, ws, cfg, inclusion);
      r.states = dfa.explored();
      break;
    }
    case Construction::Iy: {
      auto zero = bdd::bottom(ws.tests());
      auto a = construct::ilie_yu(ws, construct::star_normalise(d, x));
      auto b = construct::ilie_yu(ws, construct::star_normalise(d, y));
      const auto offset = static_cast<std::uint32_t>(a.n);
      construct::EliminatedNfa nfa(ws, construct::disjoint_union(a, b, zero));
      automata::Determinised dfa(nfa);
      auto sx = dfa.start({0});
      auto sy = dfa.start({offset});
      r = run(dfa, sx, sy, ws, cfg, inclusion);
      r.states = dfa.explored();
      break;
    }
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace symkat::cli
