#include "dynalg/rational_function.hpp"

#include <algorithm>

namespace dynalg {

const Scalar& PointP1::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "point at infinity has no finite coordinate");
  return *value_;
}

bool canonical_less(const PointP1& a, const PointP1& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return canonical_less(a.value(), b.value());
}

std::string PointP1::to_string() const { return value_ ? value_->to_string() : "inf"; }

PointP1 parse_point(std::string_view text, Field field) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s == "inf" || s == "infinity" || s == "oo") return PointP1::infinity();
  return PointP1(parse_scalar(s, field));
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  Polynomial g = gcd(num, den);
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(Scalar(1));
    return;
  }
  num_ = divide_exact(num, g);
  den_ = divide_exact(den, g);
  Scalar lc = den_.leading();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "composition produced a zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  Scalar lc = den_.leading();
  if (!lc.is_one()) {
    Scalar inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::reciprocal() {
  return RationalFunction(Polynomial(Scalar(1)), Polynomial::x());
}

int RationalFunction::degree() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorCode::PreconditionFailed, "expected a polynomial, got " + to_string());
  return num_;
}

PointP1 RationalFunction::evaluate(const PointP1& z) const {
  if (z.is_finite()) {
    Scalar d = den_.evaluate(z.value());
    if (d.is_zero()) return PointP1::infinity();
    return PointP1(num_.evaluate(z.value()) / d);
  }
  if (num_.degree() > den_.degree()) return PointP1::infinity();
  if (num_.degree() == den_.degree()) return PointP1(num_.leading() / den_.leading());
  return PointP1(Scalar(0));
}

Scalar RationalFunction::evaluate_finite(const Scalar& z) const {
  Scalar d = den_.evaluate(z);
  if (d.is_zero()) throw Error(ErrorCode::PoleAtBasePoint, "pole at " + z.to_string() + " of " + to_string());
  return num_.evaluate(z) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_ && is_polynomial()) return *this = RationalFunction(num_ + o.num_);
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_ && is_polynomial()) return *this = RationalFunction(num_ - o.num_);
  return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_polynomial() && o.is_polynomial()) return *this = RationalFunction(num_ * o.num_);
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by the zero function");
  return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(Scalar(1)) / pow(-e);
  return RationalFunction(num_.pow(e), den_.pow(e), Reduced{});
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner, int degree_cap) {
  const long target = static_cast<long>(outer.degree()) * std::max(inner.degree(), 1);
  if (target > degree_cap) {
    throw Error(ErrorCode::IterationBudgetExceeded,
                "composition degree " + std::to_string(target) + " exceeds cap " + std::to_string(degree_cap));
  }
  const Polynomial& p = inner.numerator();
  const Polynomial& q = inner.denominator();
  if (inner.is_polynomial() && outer.is_polynomial()) {
    return RationalFunction(outer.numerator().compose(p));
  }
  // Homogenize: N(p/q) q^n and D(p/q) q^n. For reduced inputs the results are coprime.
  const int n = outer.degree();
  std::vector<Polynomial> ppow{Polynomial(Scalar(1))}, qpow{Polynomial(Scalar(1))};
  for (int k = 1; k <= n; ++k) {
    ppow.push_back(ppow.back() * p);
    qpow.push_back(qpow.back() * q);
  }
  auto homogenize = [&](const Polynomial& f) {
    Polynomial acc;
    for (int k = 0; k <= f.degree(); ++k) {
      const Scalar c = f.coeff(k);
      if (!c.is_zero()) acc += c * (ppow[static_cast<std::size_t>(k)] * qpow[static_cast<std::size_t>(n - k)]);
    }
    return acc;
  };
  Polynomial num = homogenize(outer.numerator());
  Polynomial den = homogenize(outer.denominator());
  if (den.is_zero()) {
    throw Error(ErrorCode::ZeroDenominator, "composition is identically infinite");
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction iterate(const RationalFunction& a, int l, int degree_cap) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "iterate count must be at least 1");
  long deg = 1;
  for (int k = 0; k < l; ++k) {
    deg *= std::max(a.degree(), 1);
    if (deg > degree_cap) {
      throw Error(ErrorCode::IterationBudgetExceeded,
                  "iterate degree exceeds cap " + std::to_string(degree_cap));
    }
  }
  RationalFunction result = a;
  for (int k = 1; k < l; ++k) result = compose(a, result, degree_cap);
  return result;
}

RationalFunction derivative(const RationalFunction& a) { return a.derivative(); }

RationalFunction conjugate_by_reciprocal(const RationalFunction& a) {
  const RationalFunction r = RationalFunction::reciprocal();
  return compose(r, compose(a, r));
}

int local_degree(const RationalFunction& x, const PointP1& z0) {
  if (x.is_constant()) throw Error(ErrorCode::PreconditionFailed, "local degree of a constant map");
  if (z0.is_infinity()) return local_degree(compose(x, RationalFunction::reciprocal()), PointP1(Scalar(0)));
  const Scalar& z = z0.value();
  PointP1 v = x.evaluate(z0);
  if (v.is_infinity()) return root_multiplicity(x.denominator(), z);
  Polynomial diff = x.numerator() - v.value() * x.denominator();
  return root_multiplicity(diff, z);
}

}  // namespace dynalg
