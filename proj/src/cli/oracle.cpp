#include "symkat/cli/oracle.hpp"

#include "symkat/equiv/equiv.hpp"
#include "symkat/kat/explicit.hpp"
#include "symkat/kat/guarded.hpp"

namespace symkat::cli {

bool oracle_check(const kat::Signature& sig, const kat::Expr& e1, const kat::Expr& e2,
                  std::size_t bound, Mode mode) {
  if (sig.num_tests() > 3 || sig.num_letters() > 2 || bound > 4)
    throw std::invalid_argument("oracle_check: signature or bound exceeds the oracle cap");
  kat::ExplicitKat kat(sig);
  kat::ExplicitDerivativeDfa dfa(kat);
  kat::ExprId x = kat.compile(e1);
  kat::ExprId y = kat.compile(e2);
  const bool incl = mode == Mode::Incl;
  auto leq = [&](std::uint64_t a, std::uint64_t b) { return incl ? (a & ~b) == 0 : a == b; };
  auto verdict = equiv::naive_check(dfa, x, y, leq);

  auto gx = kat::g_upto(e1, sig, bound);
  auto gy = kat::g_upto(e2, sig, bound);
  bool bounded = incl ? gx.subset_of(gy) : gx == gy;
  if (verdict.holds && !bounded)
    throw OracleDisagreement("derivative automaton relates the expressions, bounded languages differ");
  if (!verdict.holds && verdict.witness.size() <= bound && bounded)
    throw OracleDisagreement("counter-example within the bound, bounded languages agree");
  return verdict.holds;
}

}  // namespace symkat::cli
