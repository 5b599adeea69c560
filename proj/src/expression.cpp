#include "constructive/expression.hpp"

#include <cctype>
#include <string>

#include "constructive/error.hpp"

namespace constructive {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Crn parse() {
    Crn value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Crn expr() {
    Crn value = term();
    for (;;) {
      if (consume('+')) {
        value = value + term();
      } else if (consume('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Crn term() {
    Crn value = factor();
    while (consume('*')) value = value * factor();
    return value;
  }

  Crn factor() {
    skip_space();
    if (consume('(')) {
      Crn inner = expr();
      expect(')');
      return inner;
    }
    if (peek_digit() || (peek() == '-' && next_is_digit())) return Crn::from_rational(rational());
    const std::string name = identifier();
    if (name.empty()) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
    expect('(');
    Crn first = expr();
    if (name == "abs") {
      expect(')');
      return abs(first);
    }
    if (name != "min" && name != "max" && name != "div") fail("unknown function '" + name + "'");
    expect(',');
    Crn second = expr();
    if (name == "div") {
      expect(',');
      const int k = precision();
      expect(')');
      return divide(first, second, witness_against_zero(second, k));
    }
    expect(')');
    return name == "min" ? min(first, second) : max(first, second);
  }

  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      if (!peek_digit()) fail("expected denominator");
      digits();
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  int precision() {
    skip_space();
    if (!peek_digit()) fail("expected a non-negative precision");
    const std::size_t start = pos_;
    digits();
    const std::string_view body = text_.substr(start, pos_ - start);
    if (body.size() > 6) fail("precision too large");
    return std::stoi(std::string(body));
  }

  std::string identifier() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) out.push_back(text_[pos_++]);
    return out;
  }

  void digits() {
    while (peek_digit()) ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool peek_digit() const { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool next_is_digit() const {
    return pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Crn parse_real(std::string_view text) { return Parser(text).parse(); }

}  // namespace constructive
