#include "dynalg/parser.hpp"

#include <cctype>
#include <string>

namespace dynalg {

namespace {

constexpr long kMaxExponent = kDefaultDegreeCap;

class Parser {
 public:
  Parser(std::string_view text, Field field) : s_(text), field_(field) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ < s_.size()) fail("operator or end of input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, expected,
                     "parse error at position " + std::to_string(pos_) + ": expected " + expected +
                         ", found " + found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.numerator().is_zero()) {
          pos_ = at;
          throw Error(ErrorCode::ZeroDenominator, "division by zero in expression at position " + std::to_string(at));
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (accept('^')) {
      skip();
      if (!at_digit()) fail("nonnegative integer exponent");
      std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 6 || std::stol(e) > kMaxExponent) {
        pos_ = at;
        fail("exponent at most " + std::to_string(kMaxExponent));
      }
      return base.pow(static_cast<int>(std::stol(e)));
    }
    return base;
  }

  Scalar imaginary(const Scalar& v) {
    if (field_ == Field::Q) fail("real literal (imaginary unit needs --field Qi)");
    return v * Scalar::imaginary_unit();
  }

  // p, p/q, optionally followed by i. The slash binds inside a literal so that
  // `3/4i` reads as (3/4)i.
  Scalar number() {
    mpq_class value{mpz_class(digits())};
    std::size_t save = pos_;
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::size_t at = pos_;
      mpz_class den(digits());
      if (den == 0) {
        pos_ = at;
        throw Error(ErrorCode::DivisionByZero, "zero denominator in literal at position " + std::to_string(at));
      }
      value /= den;
      value.canonicalize();
      save = pos_;
    }
    Scalar v(value);
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return imaginary(v);
    }
    pos_ = save;
    return v;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("number, 'z' or '('");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(number());
    if (c == 'z') {
      ++pos_;
      return RationalFunction::identity();
    }
    if (c == 'i') {
      ++pos_;
      return RationalFunction(imaginary(Scalar(1)));
    }
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("')'");
      return inner;
    }
    fail("number, 'z' or '('");
  }

  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_ratfunc(std::string_view text, Field field) { return Parser(text, field).parse(); }

}  // namespace dynalg
