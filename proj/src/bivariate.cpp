#include "dynalg/bivariate.hpp"

#include <algorithm>
#include <cctype>

namespace dynalg {

BivariatePolynomial::BivariatePolynomial(Scalar c) {
  if (!c.is_zero()) t_.emplace(Key{0, 0}, std::move(c));
}

BivariatePolynomial BivariatePolynomial::monomial(Scalar c, int i, int j) {
  BivariatePolynomial p;
  if (!c.is_zero()) p.t_.emplace(Key{i, j}, std::move(c));
  return p;
}

BivariatePolynomial BivariatePolynomial::x() { return monomial(Scalar(1), 1, 0); }
BivariatePolynomial BivariatePolynomial::y() { return monomial(Scalar(1), 0, 1); }

BivariatePolynomial BivariatePolynomial::in_x(const Polynomial& p) {
  BivariatePolynomial out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term({k, 0}, p.coeff(k));
  return out;
}

BivariatePolynomial BivariatePolynomial::in_y(const Polynomial& p) {
  BivariatePolynomial out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term({0, k}, p.coeff(k));
  return out;
}

void BivariatePolynomial::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Scalar BivariatePolynomial::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Scalar() : it->second;
}

int BivariatePolynomial::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}

int BivariatePolynomial::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

std::vector<Polynomial> BivariatePolynomial::coefficients_in_y() const {
  std::vector<std::vector<Scalar>> raw(static_cast<std::size_t>(std::max(degree_y() + 1, 0)));
  for (const auto& [k, c] : t_) {
    auto& v = raw[static_cast<std::size_t>(k.second)];
    if (v.size() <= static_cast<std::size_t>(k.first)) v.resize(static_cast<std::size_t>(k.first) + 1);
    v[static_cast<std::size_t>(k.first)] = c;
  }
  std::vector<Polynomial> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<Polynomial> BivariatePolynomial::coefficients_in_x() const { return swapped().coefficients_in_y(); }

BivariatePolynomial BivariatePolynomial::from_coefficients_in_y(const std::vector<Polynomial>& c) {
  BivariatePolynomial out;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i) out.add_term({i, static_cast<int>(j)}, c[j].coeff(i));
  return out;
}

bool graded_lex_less(const BivariatePolynomial::Key& a, const BivariatePolynomial::Key& b) {
  const int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first > b.first;
}

BivariatePolynomial BivariatePolynomial::normalized() const {
  if (t_.empty()) return *this;
  auto first = std::min_element(t_.begin(), t_.end(),
                                [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  const Scalar inv = first->second.inverse();
  BivariatePolynomial out = *this;
  for (auto& [k, c] : out.t_) c *= inv;
  return out;
}

Scalar BivariatePolynomial::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar acc;
  for (const auto& [k, c] : t_) acc += c * x.pow(k.first) * y.pow(k.second);
  return acc;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out;
  for (const auto& [k, c] : t_) out.t_.emplace(Key{k.second, k.first}, c);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out = *this;
  for (auto& [k, c] : out.t_) c = -c;
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(int e) const {
  BivariatePolynomial r(Scalar(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Key, Scalar>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
  std::string out;
  for (const auto& [k, c] : terms) {
    std::string mono;
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", k.first);
    var("y", k.second);
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      if (mono.empty()) coeff = a.get_str();
      else if (a != 1) coeff = a.get_str() + "*";
    } else {
      coeff = "(" + c.to_string() + ")";
      if (!mono.empty()) coeff += "*";
    }
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    out += coeff + mono;
  }
  return out;
}

namespace {

// Leading term with y as the major variable.
const std::pair<const BivariatePolynomial::Key, Scalar>& leading_term(const BivariatePolynomial& p) {
  return *std::max_element(p.terms().begin(), p.terms().end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.second, a.first.first) < std::make_pair(b.first.second, b.first.first);
  });
}

bool try_divide(const BivariatePolynomial& a, const BivariatePolynomial& b, BivariatePolynomial& q) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  q = BivariatePolynomial();
  BivariatePolynomial r = a;
  const auto lb = leading_term(b);
  const Scalar inv = lb.second.inverse();
  while (!r.is_zero()) {
    const auto la = leading_term(r);
    const int di = la.first.first - lb.first.first, dj = la.first.second - lb.first.second;
    if (di < 0 || dj < 0) return false;
    BivariatePolynomial t = BivariatePolynomial::monomial(la.second * inv, di, dj);
    q += t;
    r -= t * b;
  }
  return true;
}

}  // namespace

BivariatePolynomial divide_exact(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial q;
  if (!try_divide(a, b, q)) throw Error(ErrorCode::InvalidArgument, "bivariate division is not exact");
  return q;
}

bool divides(const BivariatePolynomial& b, const BivariatePolynomial& a) {
  BivariatePolynomial q;
  return try_divide(a, b, q);
}

namespace {

class BivariateParser {
 public:
  BivariateParser(std::string_view s, Field f) : s_(s), field_(f) {}

  BivariatePolynomial parse() {
    BivariatePolynomial r = expr();
    skip();
    if (pos_ < s_.size()) fail("operator or end of input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected, "parse error at position " + std::to_string(pos_) + ": expected " + expected);
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
  BivariatePolynomial expr() {
    BivariatePolynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }
  BivariatePolynomial term() {
    BivariatePolynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }
  BivariatePolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    BivariatePolynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_ || pos_ - start > 4) fail("small nonnegative integer exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  BivariatePolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("number, 'x', 'y' or '('");
    const char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BivariatePolynomial::x() : BivariatePolynomial::y();
    }
    if (c == '(') {
      ++pos_;
      BivariatePolynomial inner = expr();
      if (!accept(')')) fail("')'");
      return inner;
    }
    if (c == 'i' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == 'i'))
        ++pos_;
      return BivariatePolynomial(parse_scalar(s_.substr(start, pos_ - start), field_));
    }
    fail("number, 'x', 'y' or '('");
  }

  std::string_view s_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePolynomial parse_bivariate(std::string_view text, Field field) { return BivariateParser(text, field).parse(); }

}  // namespace dynalg
