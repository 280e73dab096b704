#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "incmon/kgroup.hpp"

namespace incmon {

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

// Expression tree over Z{a,b}. Word literals are products of letters; ^ on a letter
// repeats the letter, ^ on anything else is a ring power.
struct Expression {
  enum class Kind { Integer, Letter, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  Integer value;  // Integer literal, or the exponent for Pow
  incmon::Letter letter = incmon::Letter::a;
  std::vector<std::unique_ptr<Expression>> children;

  KElement evaluate() const;
};

std::unique_ptr<Expression> parse(const std::string& s);
// parse then evaluate
KElement parse_kelement(const std::string& s);

}  // namespace incmon
