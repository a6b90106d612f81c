#include "dynalg/algdep.hpp"

#include <algorithm>
#include <numeric>

#include "dynalg/matrix.hpp"

namespace dynalg {

std::vector<std::pair<int, int>> graded_lex_monomials(int m, int n) {
  std::vector<std::pair<int, int>> keys;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) keys.emplace_back(i, j);
  std::sort(keys.begin(), keys.end(), graded_lex_less);
  return keys;
}

namespace {

std::vector<LaurentSeries> powers(const LaurentSeries& s, int count, int max_exponent) {
  std::vector<LaurentSeries> out{LaurentSeries(0, {Scalar(1)}, kExactPrecision)};
  for (int k = 1; k <= count; ++k) out.push_back(out.back().times(s, max_exponent));
  return out;
}

std::optional<DependencyCertificate> search_at_scale(const LaurentSeries& s1, const LaurentSeries& s2, int m, int n,
                                                     int order, int extra, const Scalar& scale) {
  const auto keys = graded_lex_monomials(m, n);
  const int top = order + extra;
  const auto p1 = powers(s1, m, top);
  const auto p2 = powers(s2.rescale(scale), n, top);
  std::vector<LaurentSeries> cols;
  int available = top;
  int low = 0;
  for (const auto& [i, j] : keys) {
    cols.push_back(p1[static_cast<std::size_t>(i)].times(p2[static_cast<std::size_t>(j)], top));
    available = std::min(available, cols.back().precision() - 1);
    low = std::min(low, cols.back().valuation());
  }
  if (available < order) {
    throw Error(ErrorCode::InsufficientOrder, "series known only through order " + std::to_string(available) +
                                                  ", relation search needs order " + std::to_string(order));
  }
  Matrix mat(static_cast<std::size_t>(order - low + 1), keys.size());
  for (int e = low; e <= order; ++e)
    for (std::size_t c = 0; c < keys.size(); ++c) mat(static_cast<std::size_t>(e - low), c) = cols[c].coeff(e);

  const EchelonForm ef = echelon(mat);
  std::size_t first_free = keys.size();
  for (std::size_t c = 0; c < keys.size(); ++c) {
    if (c >= ef.pivot_columns.size() || ef.pivot_columns[c] != c) {
      first_free = c;
      break;
    }
  }
  DependencyCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.order = order;
  cert.columns = keys.size();
  cert.scale = scale;
  if (first_free == keys.size()) {
    cert.rank = keys.size();
    cert.verification_order = order;
    return cert;
  }
  const auto basis = nullspace(mat.left_columns(first_free + 1));
  if (basis.size() != 1) throw Error(ErrorCode::InvalidArgument, "relation prefix has an unexpected nullspace");
  Vector v = basis.front();
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  const Scalar inv = lead->inverse();
  for (auto& s : v) s *= inv;

  const int verify = available;
  BivariatePolynomial f;
  LaurentSeries check(0, {}, kExactPrecision);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    f += BivariatePolynomial::monomial(v[c], keys[c].first, keys[c].second);
    check = check.plus(cols[c].scaled(v[c]));
  }
  if (!check.vanishes_through(verify)) {
    throw Error(ErrorCode::InsufficientOrder, "relation " + f.to_string() + " found through order " +
                                                  std::to_string(order) + " fails at order " + std::to_string(verify));
  }
  cert.verdict = Verdict::Relation;
  cert.relation = f;
  cert.rank = first_free;
  cert.verification_order = verify;
  return cert;
}

}  // namespace

DependencyCertificate find_relation(const LaurentSeries& s1, const LaurentSeries& s2, int m, int n, int order,
                                    const RelationOptions& options) {
  if (m < 0 || n < 0 || (m == 0 && n == 0)) throw Error(ErrorCode::InvalidArgument, "bidegree must be nonzero");
  if (order + 1 < (m + 1) * (n + 1)) {
    throw Error(ErrorCode::InsufficientOrder, "order " + std::to_string(order) + " is too small for bidegree (" +
                                                  std::to_string(m) + "," + std::to_string(n) + ")");
  }
  if (options.scales.empty()) throw Error(ErrorCode::InvalidArgument, "no scale to try");
  std::optional<DependencyCertificate> last;
  for (const auto& c : options.scales) {
    if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "scale must be nonzero");
    last = search_at_scale(s1, s2, m, n, order, options.verification_extra, c);
    if (last->verdict == Verdict::Relation) return *last;
  }
  return *last;
}

DependencyCertificate find_relation(const TruncatedPowerSeries& s1, const TruncatedPowerSeries& s2, int m, int n,
                                    int order, const RelationOptions& options) {
  return find_relation(LaurentSeries::from_power_series(s1), LaurentSeries::from_power_series(s2), m, n, order,
                       options);
}

RationalFunction substitute(const BivariatePolynomial& f, const RationalFunction& x1, const RationalFunction& x2) {
  std::vector<RationalFunction> p1{RationalFunction(Scalar(1))}, p2{RationalFunction(Scalar(1))};
  for (int k = 1; k <= f.degree_x(); ++k) p1.push_back(p1.back() * x1);
  for (int k = 1; k <= f.degree_y(); ++k) p2.push_back(p2.back() * x2);
  RationalFunction acc;
  for (const auto& [k, c] : f.terms())
    acc += RationalFunction(c) * p1[static_cast<std::size_t>(k.first)] * p2[static_cast<std::size_t>(k.second)];
  return acc;
}

BivariatePolynomial parametrization_resultant(const RationalFunction& x1, const RationalFunction& x2) {
  if (x1.is_constant() || x2.is_constant()) {
    throw Error(ErrorCode::PreconditionFailed, "implicitization needs nonconstant coordinates");
  }
  auto lift = [](const RationalFunction& r, const BivariatePolynomial& var) {
    RingPoly<BivariatePolynomial> p;
    const int d = r.degree();
    for (int k = 0; k <= d; ++k)
      p.push_back(BivariatePolynomial(r.numerator().coeff(k)) - var * BivariatePolynomial(r.denominator().coeff(k)));
    return p;
  };
  return resultant(lift(x1, BivariatePolynomial::x()), lift(x2, BivariatePolynomial::y()));
}

namespace {

// Removes the gcd of the coefficients of f viewed as a polynomial in y (a polynomial in x).
BivariatePolynomial remove_x_content(const BivariatePolynomial& f) {
  auto cy = f.coefficients_in_y();
  Polynomial g;
  for (const auto& c : cy) g = gcd(g, c);
  if (g.degree() < 1) return f;
  for (auto& c : cy) c = divide_exact(c, g);
  return BivariatePolynomial::from_coefficients_in_y(cy);
}

BivariatePolynomial remove_y_content(const BivariatePolynomial& f) { return remove_x_content(f.swapped()).swapped(); }

// Largest d such that f is a d-th power up to a constant, found by Kronecker
// substitution x -> t, y -> t^K and a squarefree decomposition.
BivariatePolynomial fiber_root(const BivariatePolynomial& f) {
  const int dx = f.degree_x(), dy = f.degree_y();
  const int g = std::gcd(dx, dy);
  if (g < 2) return f;
  const int K = dx + 1;
  std::vector<Scalar> t(static_cast<std::size_t>(dx + K * dy) + 1);
  for (const auto& [k, c] : f.terms()) t[static_cast<std::size_t>(k.first + K * k.second)] = c;
  const auto sqf = squarefree_decomposition(Polynomial(std::move(t)));
  const BivariatePolynomial target = f.normalized();
  for (int d = g; d >= 2; --d) {
    if (g % d != 0) continue;
    if (!std::all_of(sqf.begin(), sqf.end(), [d](const auto& p) { return p.second % d == 0; })) continue;
    Polynomial root(Scalar(1));
    for (const auto& [factor, mult] : sqf) root = root * factor.pow(mult / d);
    BivariatePolynomial cand;
    for (int e = 0; e <= root.degree(); ++e)
      cand += BivariatePolynomial::monomial(root.coeff(e), e % K, e / K);
    if (cand.pow(d).normalized() == target) return cand;
  }
  return f;
}

}  // namespace

BivariatePolynomial implicitize(const RationalFunction& x1, const RationalFunction& x2) {
  BivariatePolynomial res = parametrization_resultant(x1, x2);
  if (res.is_zero()) {
    throw Error(ErrorCode::DegenerateParametrization, "resultant vanishes identically for (" + x1.to_string() + ", " +
                                                          x2.to_string() + ")");
  }
  res = remove_y_content(remove_x_content(res));
  return fiber_root(res).normalized();
}

OneToOneReport is_generically_one_to_one(const RationalFunction& x1, const RationalFunction& x2,
                                         const BivariatePolynomial& f) {
  const int fy = f.degree_y(), fx = f.degree_x();
  if (fy < 1 || fx < 1 || x1.degree() % fy != 0 || x2.degree() % fx != 0 || x1.degree() / fy != x2.degree() / fx) {
    throw Error(ErrorCode::InconsistentDegrees,
                "degree ratios " + std::to_string(x1.degree()) + "/" + std::to_string(fy) + " and " +
                    std::to_string(x2.degree()) + "/" + std::to_string(fx) + " do not agree");
  }
  const int d = x1.degree() / fy;
  return {d == 1, d};
}

bool verify_invariant_curve(const BivariatePolynomial& f, const RationalFunction& a1, const RationalFunction& a2,
                            const std::optional<std::pair<RationalFunction, RationalFunction>>& param) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial defines no curve");
  if (param) {
    const auto& [x1, x2] = *param;
    if (!substitute(f, x1, x2).numerator().is_zero()) {
      throw Error(ErrorCode::ParamMismatch, "(" + x1.to_string() + ", " + x2.to_string() + ") does not parametrize " +
                                                f.to_string());
    }
    return substitute(f, compose(a1, x1), compose(a2, x2)).numerator().is_zero();
  }
  // Numerator of f(A1(x), A2(y)) after clearing D1(x)^m D2(y)^n.
  const int m = f.degree_x(), n = f.degree_y();
  auto powers_of = [](const Polynomial& p, int count) {
    std::vector<Polynomial> out{Polynomial(Scalar(1))};
    for (int k = 1; k <= count; ++k) out.push_back(out.back() * p);
    return out;
  };
  const auto n1 = powers_of(a1.numerator(), m), d1 = powers_of(a1.denominator(), m);
  const auto n2 = powers_of(a2.numerator(), n), d2 = powers_of(a2.denominator(), n);
  BivariatePolynomial g;
  for (const auto& [k, c] : f.terms()) {
    const auto i = static_cast<std::size_t>(k.first), j = static_cast<std::size_t>(k.second);
    g += BivariatePolynomial(c) * BivariatePolynomial::in_x(n1[i] * d1[static_cast<std::size_t>(m) - i]) *
         BivariatePolynomial::in_y(n2[j] * d2[static_cast<std::size_t>(n) - j]);
  }
  // f = content(x) * primitive part; test each factor separately.
  auto fy = f.coefficients_in_y();
  Polynomial content;
  for (const auto& c : fy) content = gcd(content, c);
  for (auto& c : fy) c = divide_exact(c, content);
  const auto gy = g.coefficients_in_y();
  for (const auto& c : gy)
    if (!divmod(c, content).remainder.is_zero()) return false;
  if (fy.size() <= 1) return true;
  return pseudo_remainder(RingPoly<Polynomial>(gy.begin(), gy.end()), RingPoly<Polynomial>(fy.begin(), fy.end())).empty();
}

}  // namespace dynalg
