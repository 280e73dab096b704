#include "incmon/expr.hpp"

#include <cctype>

namespace incmon {

namespace {

using Ptr = std::unique_ptr<Expression>;

Ptr node(Expression::Kind k) {
  auto e = std::make_unique<Expression>();
  e->kind = k;
  return e;
}

Ptr binary(Expression::Kind k, Ptr l, Ptr r) {
  auto e = node(k);
  e->children.push_back(std::move(l));
  e->children.push_back(std::move(r));
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Ptr parse_all() {
    Ptr e = parse_sum();
    skip_space();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Ptr parse_sum() {
    Ptr e = parse_product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      e = binary(c == '+' ? Expression::Kind::Add : Expression::Kind::Sub, std::move(e), parse_product());
    }
    return e;
  }

  Ptr parse_product() {
    Ptr e = parse_unary();
    while (peek() == '*') {
      ++pos_;
      e = binary(Expression::Kind::Mul, std::move(e), parse_unary());
    }
    return e;
  }

  Ptr parse_unary() {
    if (peek() == '-') {
      ++pos_;
      auto e = node(Expression::Kind::Neg);
      e->children.push_back(parse_unary());
      return e;
    }
    return parse_power();
  }

  Integer parse_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return Integer(s_.substr(start, pos_ - start).c_str());
  }

  Integer parse_exponent() {
    ++pos_;  // '^'
    skip_space();
    Integer n = parse_uint();
    if (n > 100000) fail("exponent too large");
    return n;
  }

  Ptr power(Ptr base, Integer n) {
    auto e = node(Expression::Kind::Pow);
    e->value = std::move(n);
    e->children.push_back(std::move(base));
    return e;
  }

  Ptr parse_power() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Ptr e = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (peek() == '^') e = power(std::move(e), parse_exponent());
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Expression::Kind::Integer);
      e->value = parse_uint();
      if (peek() == '^') e = power(std::move(e), parse_exponent());
      return e;
    }
    if (c == 'a' || c == 'b') return parse_word();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  // Letters written next to each other multiply; ^ binds to the last letter only.
  Ptr parse_word() {
    Ptr e;
    while (pos_ < s_.size() && (s_[pos_] == 'a' || s_[pos_] == 'b')) {
      auto l = node(Expression::Kind::Letter);
      l->letter = s_[pos_] == 'a' ? Letter::a : Letter::b;
      ++pos_;
      Ptr f = std::move(l);
      if (pos_ < s_.size() && s_[pos_] == '^') f = power(std::move(f), parse_exponent());
      e = e ? binary(Expression::Kind::Mul, std::move(e), std::move(f)) : std::move(f);
    }
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

KElement Expression::evaluate() const {
  switch (kind) {
    case Kind::Integer:
      return KElement::constant(value);
    case Kind::Letter:
      return KElement(Word{letter});
    case Kind::Neg:
      return -children[0]->evaluate();
    case Kind::Add:
      return children[0]->evaluate() + children[1]->evaluate();
    case Kind::Sub:
      return children[0]->evaluate() - children[1]->evaluate();
    case Kind::Mul:
      return children[0]->evaluate() * children[1]->evaluate();
    case Kind::Pow: {
      KElement base = children[0]->evaluate();
      long n = value.convert_to<long>();
      if (children[0]->kind == Kind::Letter) return KElement(Word::power(children[0]->letter, std::size_t(n)));
      KElement r = KElement::unit();
      for (long k = 0; k < n; ++k) r = r * base;
      return r;
    }
  }
  return {};
}

std::unique_ptr<Expression> parse(const std::string& s) { return Parser(s).parse_all(); }

KElement parse_kelement(const std::string& s) { return parse(s)->evaluate(); }

}  // namespace incmon
