#include <cctype>

#include "lforge/errors.hpp"
#include "lforge/polynomial.hpp"

namespace lforge {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, std::size_t dimension) : text_(text), n_(dimension) {}

  Polynomial parse() {
    Polynomial result(n_);
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    Monomial first = parse_term_monomial();
    result.add_term(first, sign(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("'+', '-' or end of input");
      ++pos_;
      Monomial next = parse_term_monomial();
      result.add_term(next, sign(c == '-'));
    }
    return result;
  }

 private:
  Rational sign(bool negative) {
    Rational c = coeff_;
    return negative ? Rational(-c) : c;
  }

  // Parses one term; the coefficient is left in coeff_.
  Monomial parse_term_monomial() {
    skip_ws();
    Monomial mono(n_);
    coeff_ = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_digits("integer");
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = parse_digits("positive integer");
        if (den == 0) {
          pos_ = at;
          fail("positive integer");
        }
      }
      coeff_ = Rational(num, den);
      coeff_.canonicalize();
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        mono = mono * parse_factor();
        skip_ws();
      }
      return mono;
    }
    if (peek() != 'x') fail("term");
    mono = parse_factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      mono = mono * parse_factor();
      skip_ws();
    }
    return mono;
  }

  Monomial parse_factor() {
    skip_ws();
    if (peek() != 'x') fail("'x'");
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    Integer index = parse_digits("variable index");
    if (index < 1 || index > n_)
      throw DimensionError("variable x" + index.get_str() + " at position " + std::to_string(at) +
                           " exceeds dimension " + std::to_string(n_));
    unsigned power = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      Integer e = parse_digits("exponent");
      if (!e.fits_uint_p()) fail("exponent");
      power = static_cast<unsigned>(e.get_ui());
    }
    return Monomial::unit(n_, static_cast<std::size_t>(index.get_ui() - 1), power);
  }

  Integer parse_digits(const char* what) {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(what);
    return Integer(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(pos_, expected, text_); }

  const std::string& text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  Rational coeff_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t dimension) {
  return PolynomialParser(text, dimension).parse();
}

}  // namespace lforge
