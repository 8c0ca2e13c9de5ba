#include "foliage/cli/expression.hpp"

#include <cctype>

namespace foliage {

ParseError::ParseError(const std::string& message, int line, int column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Poly2::Vars& vars) : text_(text), vars_(vars) {}

  Poly2 parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly2 p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  bool starts_atom() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Poly2 expr() {
    Poly2 acc = term();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      advance();
      skip_space();
      Poly2 rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
  }

  Poly2 term() {
    Poly2 acc = unary();
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        advance();
        skip_space();
        acc *= unary();
      } else if (c == '/') {
        const int line = line_, col = col_;
        advance();
        skip_space();
        Poly2 d = unary();
        if (d.is_zero()) throw ParseError("division by zero", line, col);
        if (d.terms().size() != 1 || d.terms().begin()->first != Poly2::Exponent{0, 0})
          throw ParseError("division by a non-constant expression", line, col);
        acc *= d.constant_term().inverse();
      } else if (starts_atom()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Poly2 unary() {
    skip_space();
    const char c = peek();
    if (c == '-' || c == '+') {
      advance();
      Poly2 p = unary();
      return c == '-' ? -p : p;
    }
    return power();
  }

  Poly2 power() {
    Poly2 base = atom();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      advance();
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
    const std::string digits = read_digits();
    if (paren) {
      skip_space();
      if (peek() != ')') fail("exponent must be a nonnegative integer");
      advance();
    }
    if (digits.size() > 4) fail("exponent too large");
    return pow(base, std::stoi(digits));
  }

  std::string read_digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  Poly2 atom() {
    skip_space();
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = read_digits();
      if (peek() == '.') fail("decimal literals are not supported; write a/b");
      return Poly2(vars_, FieldElement(mpq_class(mpz_class(digits))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name(1, c);
      for (int k = 0; k < 2; ++k)
        if (vars_[k] == name) {
          advance();
          return Poly2::variable(vars_, k);
        }
      fail("unknown variable '" + name + "'");
    }
    if (c == '(') {
      advance();
      skip_space();
      Poly2 p = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  const Poly2::Vars& vars_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

Poly2 parse_poly(const std::string& text, const Poly2::Vars& vars) {
  for (const auto& v : vars)
    if (v.size() != 1) throw std::invalid_argument("parse_poly: variables must be single letters");
  return Parser(text, vars).parse();
}

}  // namespace foliage
