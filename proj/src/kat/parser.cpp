#include "symkat/kat/parser.hpp"

#include <cctype>

namespace symkat::kat {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return ident_start(c) || c == '0' || c == '1' || c == '(' || c == '!' || c == '~';
  }

  Test require_test(const Expr& e, std::size_t at, const char* op) {
    auto t = as_test(e);
    if (!t) throw ParseError(std::string("operand of '") + op + "' is not a test", at);
    return *t;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '|') return lhs;
      std::size_t at = pos_++;
      Expr rhs = product();
      if (c == '+') {
        lhs = expr_sum(lhs, rhs);
      } else {
        Test l = require_test(lhs, at, "|");
        lhs = expr_test(test_or(l, require_test(rhs, at, "|")));
      }
    }
  }

  Expr product() {
    Expr lhs = postfix();
    for (;;) {
      char c = peek();
      if (c == ';' || c == '&') {
        std::size_t at = pos_++;
        Expr rhs = postfix();
        if (c == ';') {
          lhs = expr_prod(lhs, rhs);
        } else {
          Test l = require_test(lhs, at, "&");
          lhs = expr_test(test_and(l, require_test(rhs, at, "&")));
        }
      } else if (starts_primary(c)) {
        lhs = expr_prod(lhs, postfix());
      } else {
        return lhs;
      }
    }
  }

  Expr postfix() {
    Expr e = prefix();
    while (peek() == '*') {
      ++pos_;
      e = expr_star(e);
    }
    return e;
  }

  Expr prefix() {
    char c = peek();
    if (c == '!' || c == '~') {
      std::size_t at = pos_++;
      Expr e = prefix();
      return expr_test(test_not(require_test(e, at, "!")));
    }
    return primary();
  }

  Expr primary() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '0' ? expr_zero() : expr_one();
    }
    if (!ident_start(c)) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return symbol(text_.substr(start, pos_ - start), start);
  }

  Expr symbol(std::string_view name, std::size_t at) {
    if (auto t = sig_.test_index(name)) return expr_test(test_var(*t));
    if (auto p = sig_.letter_index(name)) return expr_letter(*p);
    if (name.size() > 1) {
      Expr acc;
      for (std::size_t i = 0; i < name.size(); ++i) {
        std::string_view one = name.substr(i, 1);
        Expr e;
        if (auto t = sig_.test_index(one)) {
          e = expr_test(test_var(*t));
        } else if (auto p = sig_.letter_index(one)) {
          e = expr_letter(*p);
        } else {
          acc = nullptr;
          break;
        }
        acc = acc ? expr_prod(acc, e) : e;
      }
      if (acc) return acc;
    }
    throw ParseError("undeclared identifier '" + std::string(name) + "'", at);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, const Signature& sig) { return Parser(text, sig).run(); }

}  // namespace symkat::kat
