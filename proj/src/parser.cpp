#include <cctype>
#include <string>

#include "quotcert/error.hpp"
#include "quotcert/polynomial.hpp"

namespace quotcert {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = consume('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (consume('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base_value = base();
    if (consume('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a nonnegative integer", at);
      unsigned long exp = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exp = exp * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (exp > 100000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return base_value.pow(static_cast<unsigned>(exp));
    }
    return base_value;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
    throw ParseError("expected variable, number, or '('", pos_);
  }

  Polynomial variable() {
    std::size_t at = pos_;
    std::string name;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        name.push_back(c);
        ++pos_;
      } else {
        break;
      }
    }
    auto index = ring_->index_of(name);
    if (!index) throw UnknownVariableError(name, at);
    return Polynomial::variable(ring_, *index);
  }

  Int integer() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = consume('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", at);
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? Int(-value) : value;
  }

  Polynomial rational() {
    std::size_t at = pos_;
    Int num = integer();
    if (consume('/')) {
      std::size_t den_at = pos_;
      Int den = integer();
      if (den <= 0) throw ParseError("denominator must be a positive integer", den_at);
      (void)at;
      return Polynomial::constant(ring_, Rational(num, den));
    }
    return Polynomial::constant(ring_, Rational(num));
  }

  RingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return Parser(ring, text).run();
}

}  // namespace quotcert
