#include "symkat/cli/random.hpp"

#include <stdexcept>
#include <string>

namespace symkat::cli {

kat::Signature make_signature(std::size_t tests, std::size_t letters) {
  static const std::string test_names = "abcdefghijk";
  static const std::string letter_names = "pqrstuvwxyz";
  kat::Signature sig;
  for (std::size_t i = 0; i < tests; ++i)
    sig.tests.push_back(i < test_names.size() ? std::string(1, test_names[i]) : "t" + std::to_string(i));
  for (std::size_t i = 0; i < letters; ++i)
    sig.letters.push_back(i < letter_names.size() ? std::string(1, letter_names[i])
                                                  : "l" + std::to_string(i));
  return sig;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

kat::Test random_literal(std::mt19937_64& rng, std::uint32_t var) {
  auto t = kat::test_var(var);
  return pick(rng, 2) ? t : kat::test_not(t);
}

kat::Expr random_leaf(std::mt19937_64& rng, const RandomConfig& cfg) {
  bool letter = cfg.tests == 0 || (cfg.letters > 0 && pick(rng, 2) == 0);
  if (letter) return kat::expr_letter(static_cast<std::uint32_t>(pick(rng, cfg.letters)));
  auto a = static_cast<std::uint32_t>(pick(rng, cfg.tests));
  if (cfg.tests < 2 || pick(rng, 2) == 0) return kat::expr_test(random_literal(rng, a));
  auto b = static_cast<std::uint32_t>(pick(rng, cfg.tests - 1));
  if (b >= a) ++b;
  return kat::expr_test(kat::test_and(random_literal(rng, a), random_literal(rng, b)));
}

kat::Expr generate(std::mt19937_64& rng, const RandomConfig& cfg, std::size_t c) {
  if (c == 0) return random_leaf(rng, cfg);
  switch (pick(rng, 3)) {
    case 0: return kat::expr_star(generate(rng, cfg, c - 1));
    case 1: {
      std::size_t left = pick(rng, c);
      auto l = generate(rng, cfg, left);
      return kat::expr_sum(l, generate(rng, cfg, c - 1 - left));
    }
    default: {
      std::size_t left = pick(rng, c);
      auto l = generate(rng, cfg, left);
      return kat::expr_prod(l, generate(rng, cfg, c - 1 - left));
    }
  }
}

}  // namespace

kat::Expr random_expr(std::mt19937_64& rng, const RandomConfig& cfg) {
  if (cfg.tests == 0 && cfg.letters == 0) throw std::invalid_argument("empty signature");
  return generate(rng, cfg, cfg.connectives);
}

kat::Expr saturate(const kat::Expr& x, std::size_t letters) {
  if (letters == 0) throw std::invalid_argument("saturate: no letters");
  kat::Expr all = kat::expr_letter(0);
  for (std::uint32_t p = 1; p < letters; ++p) all = kat::expr_sum(all, kat::expr_letter(p));
  return kat::expr_sum(x, kat::expr_star(all));
}

}  // namespace symkat::cli
