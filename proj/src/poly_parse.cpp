#include <cctype>
#include <optional>
#include <string>

#include "motzkin/error.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {
namespace {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (['*'] unary)*        juxtaposition such as 2x is allowed
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '(' || is_variable(c)) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    const BigInt e = integer();
    if (e > 4096) fail("exponent too large", start);
    return pow(base, e.convert_to<unsigned>());
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (is_variable(c)) {
      if (variable_ && *variable_ != c) fail("mixed variable names");
      variable_ = c;
      ++pos_;
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(integer());
    fail(at_end() ? "unexpected end of expression" : "unexpected character");
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_variable(char c) { return c == 'x' || c == 't'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) { fail(what, pos_); }
  [[noreturn]] void fail(const char* what, std::size_t at) {
    throw Error(ErrorKind::InvalidPolynomial, what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<char> variable_;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace motzkin
