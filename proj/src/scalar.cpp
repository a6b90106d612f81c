#include "dynalg/scalar.hpp"

#include <cctype>

namespace dynalg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorCode::ResonantMultiplier: return "ResonantMultiplier";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::LeadingCoefficientNotSolvable: return "LeadingCoefficientNotSolvable";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::PoleAtBasePoint: return "PoleAtBasePoint";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::DegenerateParametrization: return "DegenerateParametrization";
    case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::UnresolvedPreimage: return "UnresolvedPreimage";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::FactorizationBoundExceeded: return "FactorizationBoundExceeded";
    case ErrorCode::MissingFixture: return "MissingFixture";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Qi") return Field::Qi;
  throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(name) + "' (expected Q or Qi)");
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in scalar literal");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

bool Scalar::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  mpq_class n = norm2();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::size_t Scalar::bit_size() const {
  auto bits = [](const mpq_class& q) {
    if (sgn(q) == 0) return std::size_t{0};
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  return bits(re_) + bits(im_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering canonical_cmp(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = re_.get_str();
  if (imag[0] != '-') out += '+';
  return out + imag;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
  }
  return a;
}

namespace {

// Cursor over a whitespace-free copy of the literal.
struct LiteralReader {
  std::string s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos, expected,
                     "invalid scalar literal '" + s + "' at " + std::to_string(pos) +
                         ": expected " + expected);
  }

  bool read_digits(mpz_class& out) {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) return false;
    out = mpz_class(s.substr(start, pos - start), 10);
    return true;
  }

  // [sign] [digits [/ digits]] [i]; returns false when no term was present.
  bool read_term(mpq_class& value, bool& imaginary, bool allow_sign) {
    int sign = 1;
    if (allow_sign && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos;
    }
    mpz_class num, den(1);
    bool have_num = read_digits(num);
    if (have_num && peek() == '/') {
      ++pos;
      if (!read_digits(den)) fail("denominator digits");
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in scalar literal '" + s + "'");
    }
    imaginary = false;
    if (peek() == 'i') {
      ++pos;
      imaginary = true;
      if (!have_num) num = 1;
    } else if (!have_num) {
      return false;
    }
    value = mpq_class(num, den);
    value.canonicalize();
    if (sign < 0) value = -value;
    return true;
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, Field field) {
  LiteralReader r;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) r.s += c;
  if (r.s.empty()) r.fail("a number");

  mpq_class first, second;
  bool first_im = false, second_im = false;
  if (!r.read_term(first, first_im, true)) r.fail("a number");
  mpq_class re = first_im ? mpq_class(0) : first;
  mpq_class im = first_im ? first : mpq_class(0);
  if (!r.done()) {
    if (first_im || (r.peek() != '+' && r.peek() != '-')) r.fail("end of literal");
    if (!r.read_term(second, second_im, true) || !second_im) r.fail("imaginary part ending in 'i'");
    im = second;
  }
  if (!r.done()) r.fail("end of literal");
  if (field == Field::Q && sgn(im) != 0) {
    throw ParseError(0, "rational literal", "imaginary literal '" + r.s + "' not allowed in field Q");
  }
  return Scalar(re, im);
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

bool sqrt_in_field(const Scalar& v, Field field, Scalar& out) {
  if (v.is_real()) {
    mpq_class r;
    if (sgn(v.re()) >= 0) {
      if (!rational_sqrt(v.re(), r)) return false;
      out = Scalar(r);
      return true;
    }
    if (field == Field::Q || !rational_sqrt(-v.re(), r)) return false;
    out = Scalar(mpq_class(0), r);
    return true;
  }
  if (field == Field::Q) return false;
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |v|)/2, y^2 = (|v| - a)/2, sign(xy) = sign(b).
  mpq_class modulus;
  if (!rational_sqrt(v.norm2(), modulus)) return false;
  mpq_class x, y;
  if (!rational_sqrt((v.re() + modulus) / 2, x) || !rational_sqrt((modulus - v.re()) / 2, y)) return false;
  if (sgn(v.im()) < 0) y = -y;
  out = Scalar(x, y);
  return true;
}

}  // namespace dynalg
