#include "dynalg/polynomial.hpp"

#include <algorithm>

namespace dynalg {

Polynomial::Polynomial(Scalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(Scalar c, int degree) {
  if (c.is_zero()) return Polynomial();
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Scalar& root) {
  return Polynomial(std::vector<Scalar>{-root, Scalar(1)});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return c_[static_cast<std::size_t>(k)];
}

const Scalar& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return c_.back();
}

bool Polynomial::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  Polynomial out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& z) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::taylor_shift(const Scalar& shift) const {
  return compose(Polynomial(std::vector<Scalar>{shift, Scalar(1)}));
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result(Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::reversed(int formal_degree) const {
  std::vector<Scalar> v(static_cast<std::size_t>(formal_degree) + 1);
  for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(formal_degree - k)] = c_[static_cast<std::size_t>(k)];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class a = abs(c.re());
      if (k == 0) coeff = a.get_str();
      else if (a != 1) coeff = a.get_str() + "*";
    } else {
      coeff = "(" + c.to_string() + ")";
      if (k > 0) coeff += "*";
    }
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    out += coeff + mono;
  }
  return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  Scalar inv = b.leading().inverse();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    Scalar t = rem[static_cast<std::size_t>(k)] * inv;
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) {
      if (!bc[static_cast<std::size_t>(j)].is_zero())
        rem[static_cast<std::size_t>(k - db + j)] -= t * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return qr.quotient;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int root_multiplicity(const Polynomial& p, const Scalar& root) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity in the zero polynomial");
  int m = 0;
  Polynomial q = p;
  const Polynomial f = Polynomial::linear_factor(root);
  while (q.degree() >= 1 && q.evaluate(root).is_zero()) {
    q = divmod(q, f).quotient;
    ++m;
  }
  return m;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = divide_exact(f, a);
  Polynomial c = divide_exact(df, a);
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace dynalg
