#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symkat/kat/syntax.hpp"

namespace symkat::kat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (loosest first):
///   sum     := product (('+' | '|') product)*
///   product := postfix ((';' | '&')? postfix)*      juxtaposition is a product
///   postfix := prefix '*'*
///   prefix  := ('!' | '~') prefix | primary
///   primary := identifier | '0' | '1' | '(' sum ')'
/// '|', '&' and negation require test operands; '+' and ';' are the KAT
/// operators and also accept tests. An undeclared identifier whose characters
/// are all declared one-character names is read as their juxtaposition.
Expr parse(std::string_view text, const Signature& sig);

}  // namespace symkat::kat
