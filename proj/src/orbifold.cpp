#include "dynalg/orbifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dynalg/roots.hpp"

namespace dynalg {

Orbifold::Orbifold(std::vector<std::pair<PointP1, int>> support) : support_(std::move(support)) {
  std::sort(support_.begin(), support_.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k].second < 2) {
      throw Error(ErrorCode::InvalidArgument, "ramification at " + support_[k].first.to_string() + " must be >= 2");
    }
    if (k > 0 && support_[k].first == support_[k - 1].first) {
      throw Error(ErrorCode::InvalidArgument, "point " + support_[k].first.to_string() + " listed twice");
    }
  }
}

int Orbifold::nu(const PointP1& z) const {
  for (const auto& [p, v] : support_)
    if (p == z) return v;
  return 1;
}

std::string Orbifold::to_string() const {
  std::string out;
  for (const auto& [p, v] : support_) {
    if (!out.empty()) out += ",";
    out += p.to_string() + ":" + std::to_string(v);
  }
  return out;
}

Orbifold parse_orbifold(std::string_view text, Field field) {
  std::vector<std::pair<PointP1, int>> support;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) {
      throw ParseError(0, "point:nu", "orbifold entry '" + item + "' is not of the form point:nu");
    }
    const std::string nu = item.substr(colon + 1);
    if (nu.empty() || nu.find_first_not_of(" 0123456789") != std::string::npos) {
      throw ParseError(colon + 1, "integer ramification", "bad ramification '" + nu + "'");
    }
    support.emplace_back(parse_point(item.substr(0, colon), field), std::stoi(nu));
  }
  return Orbifold(std::move(support));
}

Scalar euler_char(const Orbifold& o) {
  Scalar chi(2);
  for (const auto& [p, v] : o.support()) chi += Scalar::ratio(1, v) - Scalar(1);
  return chi;
}

namespace {

// One point of a fiber, or all roots of an irreducible-over-the-field factor.
struct FiberPart {
  std::optional<PointP1> point;
  Polynomial factor;
  int local_degree = 1;
  int count = 1;
};

std::vector<FiberPart> fiber(const RationalFunction& f, const PointP1& w, Field field) {
  const int d = f.degree();
  Polynomial p = w.is_infinity() ? f.denominator() : f.numerator() - w.value() * f.denominator();
  std::vector<FiberPart> out;
  if (p.degree() >= 1) {
    RootSet roots = exact_roots(p, field);
    for (const auto& [r, m] : roots.roots) out.push_back({PointP1(r), Polynomial(), m, 1});
    for (const auto& u : roots.unresolved)
      for (const auto& [g, m] : squarefree_decomposition(u)) out.push_back({std::nullopt, g, m, g.degree()});
  }
  const int finite = std::max(p.degree(), 0);
  if (w.is_infinity() ? f.numerator().degree() > f.denominator().degree() : finite < d) {
    const int m = w.is_infinity() ? f.numerator().degree() - f.denominator().degree() : d - finite;
    out.push_back({PointP1::infinity(), Polynomial(), m, 1});
  }
  return out;
}

enum class Mode { Covering, Holomorphic, Minimal };

bool condition(Mode mode, int nu1, int deg, int nu2) {
  switch (mode) {
    case Mode::Covering:
      return nu2 == nu1 * deg;
    case Mode::Holomorphic:
      return (nu1 * deg) % nu2 == 0;
    case Mode::Minimal:
      return nu2 == nu1 * std::gcd(deg, nu2) && (nu1 * deg) % nu2 == 0;
  }
  return false;
}

using FiberCache = std::map<std::string, std::vector<FiberPart>>;

MapCheck run_checks(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field, Mode mode,
                    FiberCache* cache = nullptr) {
  if (f.is_constant()) throw Error(ErrorCode::PreconditionFailed, "orbifold maps must be nonconstant");
  MapCheck out;
  auto record = [&](PointCheck pc) {
    pc.ok = condition(mode, pc.nu1, pc.local_degree, pc.nu2);
    if (!pc.ok && out.holds) {
      out.holds = false;
      out.reason = "fails at " + pc.where + ": nu2=" + std::to_string(pc.nu2) + ", nu1=" + std::to_string(pc.nu1) +
                   ", local degree " + std::to_string(pc.local_degree);
    }
    out.points.push_back(std::move(pc));
  };
  std::vector<PointP1> covered;
  int ramification = 0;
  for (const auto& [w, nu2] : o2.support()) {
    const std::vector<FiberPart>* parts;
    std::vector<FiberPart> local;
    if (cache) {
      auto key = w.to_string();
      auto it = cache->find(key);
      if (it == cache->end()) it = cache->emplace(key, fiber(f, w, field)).first;
      parts = &it->second;
    } else {
      local = fiber(f, w, field);
      parts = &local;
    }
    for (const auto& part : *parts) {
      ramification += (part.local_degree - 1) * part.count;
      PointCheck pc;
      pc.nu2 = nu2;
      pc.local_degree = part.local_degree;
      if (part.point) {
        pc.where = part.point->to_string();
        pc.nu1 = o1.nu(*part.point);
        covered.push_back(*part.point);
      } else {
        pc.where = "roots of " + part.factor.to_string();
      }
      record(std::move(pc));
    }
  }
  for (const auto& [p, nu1] : o1.support()) {
    if (std::find(covered.begin(), covered.end(), p) != covered.end()) continue;
    record({p.to_string(), nu1, local_degree(f, p), o2.nu(f.evaluate(p)), true});
  }
  if (mode == Mode::Covering && out.holds && ramification != 2 * f.degree() - 2) {
    out.holds = false;
    out.reason = "critical points outside the preimage of the support (ramification " + std::to_string(ramification) +
                 " of " + std::to_string(2 * f.degree() - 2) + ")";
  }
  return out;
}

}  // namespace

MapCheck is_covering_map(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field) {
  return run_checks(f, o1, o2, field, Mode::Covering);
}

MapCheck is_holomorphic_map(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field) {
  return run_checks(f, o1, o2, field, Mode::Holomorphic);
}

MapCheck is_minimal_holomorphic(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2, Field field) {
  return run_checks(f, o1, o2, field, Mode::Minimal);
}

namespace {

LattesCheck lattes_check(const RationalFunction& a, const Orbifold& o, Field field, FiberCache* cache) {
  if (a.degree() < 2) throw Error(ErrorCode::PreconditionFailed, "generalized Lattès maps have degree >= 2");
  if (o.empty()) throw Error(ErrorCode::PreconditionFailed, "the orbifold must be ramified somewhere");
  LattesCheck r;
  r.map = run_checks(a, o, o, field, Mode::Minimal, cache);
  r.minimal_holomorphic = r.map.holds;
  r.chi = euler_char(o);
  r.chi_nonnegative = sgn(r.chi.re()) >= 0;
  r.holds = r.minimal_holomorphic && r.chi_nonnegative;
  return r;
}

}  // namespace

LattesCheck check_generalized_lattes(const RationalFunction& a, const Orbifold& o, Field field) {
  return lattes_check(a, o, field, nullptr);
}

namespace {

std::vector<Scalar> chebyshev(int n) {
  std::vector<Polynomial> t{Polynomial(Scalar(1)), Polynomial::x()};
  for (int k = 2; k <= n; ++k) t.push_back(Scalar(2) * (Polynomial::x() * t[k - 1]) - t[k - 2]);
  std::vector<Scalar> c = t[static_cast<std::size_t>(n)].coefficients();
  return c;
}

// Is q(z) = c^{-1} T(c z) * eps for some c over the algebraic closure? Only the
// parity-matching coefficients of T are nonzero, so c enters through c^2 and,
// for even n, one extra factor of c.
bool matches_scaled(const Polynomial& q, const std::vector<Scalar>& t) {
  const int n = static_cast<int>(t.size()) - 1;
  for (int k = 0; k <= n; ++k)
    if (t[static_cast<std::size_t>(k)].is_zero() != q.coeff(k).is_zero()) return false;
  // r_k = q_k / t_k must equal c^{k-1}.
  auto r = [&](int k) { return q.coeff(k) / t[static_cast<std::size_t>(k)]; };
  const Scalar s = r(n) / r(n - 2);  // c^2
  if (n % 2 == 1) {
    for (int k = n % 2; k <= n; k += 2)
      if (!(r(k) == s.pow((k - 1) / 2))) return false;
    return true;
  }
  const Scalar c = r(n) / s.pow((n - 2) / 2);
  if (!(c * c == s)) return false;
  for (int k = 0; k <= n; k += 2)
    if (!(r(k) == c * s.pow((k - 2) / 2))) return false;
  return true;
}

}  // namespace

std::optional<std::string> recognize_special_polynomial(const RationalFunction& a) {
  if (!a.is_polynomial() || a.degree() < 2) return std::nullopt;
  const Polynomial p = a.numerator();
  const int n = p.degree();
  // Affine conjugation by z -> z + s removes the z^{n-1} term.
  const Scalar s = -p.coeff(n - 1) / (Scalar(n) * p.leading());
  const Polynomial centered = p.taylor_shift(s) - Polynomial(s);
  bool monomial = true;
  for (int k = 0; k < n; ++k)
    if (!centered.coeff(k).is_zero()) monomial = false;
  if (monomial) return "power map z^" + std::to_string(n);
  if (n > 8) return std::nullopt;
  const auto t = chebyshev(n);
  for (int eps : {1, -1}) {
    std::vector<Scalar> te = t;
    for (auto& c : te) c *= Scalar(eps);
    if (matches_scaled(centered, te)) return std::string(eps > 0 ? "" : "-") + "Chebyshev T_" + std::to_string(n);
  }
  return std::nullopt;
}

LattesDetection detect_generalized_lattes(const RationalFunction& a, int nu_max, int support_budget, Field field) {
  if (a.degree() < 2) throw Error(ErrorCode::PreconditionFailed, "generalized Lattès maps have degree >= 2");
  if (nu_max < 2) throw Error(ErrorCode::InvalidArgument, "nu_max must be at least 2");
  if (support_budget < 1) throw Error(ErrorCode::InvalidArgument, "support budget must be positive");
  LattesDetection out;
  out.special = recognize_special_polynomial(a);

  // Field-rational critical values.
  const Polynomial w = a.numerator().derivative() * a.denominator() - a.numerator() * a.denominator().derivative();
  std::vector<PointP1> values;
  auto add_unique = [](std::vector<PointP1>& v, const PointP1& p) {
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
  };
  if (w.degree() >= 1) {
    RootSet crit = exact_roots(w, field);
    for (const auto& [c, m] : crit.roots) add_unique(values, a.evaluate(PointP1(c)));
    for (const auto& u : crit.unresolved)
      out.warnings.push_back("critical points outside the field (roots of " + u.to_string() + ") skipped");
  }
  if (local_degree(a, PointP1::infinity()) >= 2) add_unique(values, a.evaluate(PointP1::infinity()));
  std::sort(values.begin(), values.end(), [](const PointP1& x, const PointP1& y) { return canonical_less(x, y); });

  // Breadth-first forward orbits until the budget is used up.
  std::vector<PointP1> pts;
  std::vector<PointP1> frontier;
  for (const auto& v : values) {
    if (static_cast<int>(pts.size()) >= support_budget) break;
    add_unique(pts, v);
    frontier.push_back(v);
  }
  while (!frontier.empty() && static_cast<int>(pts.size()) < support_budget) {
    std::vector<PointP1> next;
    for (const auto& v : frontier) {
      if (static_cast<int>(pts.size()) >= support_budget) break;
      const PointP1 image = a.evaluate(v);
      if (std::find(pts.begin(), pts.end(), image) != pts.end()) continue;
      pts.push_back(image);
      next.push_back(image);
    }
    frontier = std::move(next);
  }
  std::sort(pts.begin(), pts.end(), [](const PointP1& x, const PointP1& y) { return canonical_less(x, y); });
  out.candidate_points = pts;

  struct Candidate {
    std::vector<std::size_t> idx;
    std::vector<int> nu;
    int max_nu;
    Scalar chi;
  };
  std::vector<Candidate> cands;
  const std::size_t np = pts.size();
  const std::size_t max_size = std::min<std::size_t>(4, np);
  std::vector<std::size_t> idx;
  std::vector<int> nu;
  auto emit_nus = [&](auto&& self, std::size_t pos) -> void {
    if (pos == idx.size()) {
      Scalar chi(2);
      for (int v : nu) chi += Scalar::ratio(1, v) - Scalar(1);
      if (sgn(chi.re()) < 0) return;
      // Bad signatures (n) and (n, m) with n != m have no universal covering.
      if (nu.size() == 1 || (nu.size() == 2 && nu[0] != nu[1])) return;
      cands.push_back({idx, nu, *std::max_element(nu.begin(), nu.end()), chi});
      return;
    }
    for (int v = 2; v <= nu_max; ++v) {
      nu[pos] = v;
      self(self, pos + 1);
    }
  };
  auto choose = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (idx.size() == size) {
      nu.assign(size, 2);
      emit_nus(emit_nus, 0);
      return;
    }
    for (std::size_t k = start; k < np; ++k) {
      idx.push_back(k);
      self(self, k + 1, size);
      idx.pop_back();
    }
  };
  for (std::size_t size = 1; size <= max_size; ++size) choose(choose, 0, size);
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.max_nu != y.max_nu) return x.max_nu < y.max_nu;
    return canonical_less(x.chi, y.chi);
  });

  FiberCache cache;
  for (const auto& c : cands) {
    std::vector<std::pair<PointP1, int>> support;
    for (std::size_t k = 0; k < c.idx.size(); ++k) support.emplace_back(pts[c.idx[k]], c.nu[k]);
    Orbifold o(std::move(support));
    CandidateLogEntry entry{o, false, ""};
    try {
      LattesCheck chk = lattes_check(a, o, field, &cache);
      entry.accepted = chk.holds;
      entry.reason = chk.holds ? "minimal holomorphic self-map" : chk.map.reason;
    } catch (const Error& e) {
      entry.reason = std::string("skipped: ") + e.what();
      out.warnings.push_back("candidate " + o.to_string() + " skipped: " + e.what());
    }
    out.log.push_back(entry);
    if (entry.accepted) {
      out.found = o;
      break;
    }
  }
  return out;
}

}  // namespace dynalg
