#include <doctest.h>

#include "dynalg/dynsys.hpp"
#include "dynalg/error.hpp"
#include "support.hpp"

using namespace dynalg;
using t::fn;
using t::pt;
using t::q;

namespace {

std::optional<ExponentPair> brute_force(const Scalar& a, const Scalar& b, int bound) {
  for (int total = 2; total <= 2 * bound; ++total)
    for (int l1 = 1; l1 <= bound; ++l1) {
      const int l2 = total - l1;
      if (l2 < 1 || l2 > bound) continue;
      if (a.pow(l1) == b.pow(l2)) return ExponentPair{l1, l2};
    }
  return std::nullopt;
}

TheoremInput uv_input() {
  return TheoremInput{fn("z"), fn("2*z"), fn("4*z^2"), fn("4*z^2"), fn("2*z^2"), pt("1/4"), 1, 1, 1, 1, 1, {}, {}};
}

}  // namespace

TEST_CASE("semiconjugacy") {
  CHECK(verify_semiconjugacy(fn("z*(2+z)^2"), fn("z^2"), fn("z*(2+z^2)")).verified);
  CHECK(verify_semiconjugacy(fn("z^2"), fn("z"), fn("z^2")).verified);
  CHECK_FALSE(verify_semiconjugacy(fn("z^2"), fn("z+1"), fn("z^2")).verified);
  // The general pattern zR(z)^d, z^d, zR(z^d) with a rational R.
  CHECK(verify_semiconjugacy(fn("z*((z+3)/(z-1))^3"), fn("z^3"), fn("z*(z^3+3)/(z^3-1)")).verified);
}

TEST_CASE("commuting maps and common iterates") {
  CHECK(verify_commute(fn("z^2"), fn("z^3")));
  CHECK(verify_commute(fn("2*z^2-1"), fn("8*z^4-8*z^2+1")));
  CHECK_FALSE(verify_commute(fn("z^2"), fn("z^2+1")));

  auto p = common_iterate_search(fn("z^2"), fn("z^4"), 4096);
  REQUIRE(p.pair);
  CHECK(*p.pair == ExponentPair{2, 1});
  auto c = common_iterate_search(fn("2*z^2-1"), fn("8*z^4-8*z^2+1"), 4096);
  REQUIRE(c.pair);
  CHECK(*c.pair == ExponentPair{2, 1});
  auto n = common_iterate_search(fn("z^2-6"), fn("z^3-7*z+7"), 4096);
  CHECK_FALSE(n.pair);
  CHECK_FALSE(n.budget_exhausted);
  // Degrees are compatible but the maps do not share an iterate.
  auto d = common_iterate_search(fn("z^2"), fn("z^2+1"), 64);
  CHECK_FALSE(d.pair);
  CHECK(d.candidates_checked > 0);
}

TEST_CASE("degree compatibility") {
  CHECK(degree_compatibility(4, 8) == ExponentPair{3, 2});
  CHECK_FALSE(degree_compatibility(2, 3));
  CHECK(degree_compatibility(6, 6) == ExponentPair{1, 1});
  for (long a = 2; a <= 40; ++a)
    for (long b = 2; b <= 40; ++b) CHECK(degree_compatibility(a, b) == brute_force(Scalar(a), Scalar(b), 12));
}

TEST_CASE("multiplier dependence") {
  CHECK_FALSE(multiplier_dependence(q(6), q(-4)));
  CHECK(multiplier_dependence(q(4), q(8)) == ExponentPair{3, 2});
  CHECK(multiplier_dependence(q(2), q(2)) == ExponentPair{1, 1});
  CHECK(multiplier_dependence(q(-2), q(4)) == ExponentPair{2, 1});
  CHECK(multiplier_dependence(q(-2), q(-4)) == ExponentPair{4, 2});
  CHECK_THROWS_AS(multiplier_dependence(q(1, 2), q(2)), Error);
  const Scalar i = Scalar::imaginary_unit();
  CHECK(multiplier_dependence(Scalar(1) + i, Scalar(2) * i) == ExponentPair{2, 1});
}

TEST_CASE("multiplier dependence agrees with a brute-force search") {
  std::vector<Scalar> values;
  for (long v : {2L, -2L, 3L, 4L, -4L, 6L, 8L, -8L, 9L, 16L, -27L, 36L}) values.push_back(Scalar(v));
  values.push_back(q(3, 2));
  values.push_back(q(-9, 4));
  values.push_back(q(27, 8));
  const Scalar i = Scalar::imaginary_unit();
  values.push_back(Scalar(1) + i);
  values.push_back(Scalar(2) * i);
  values.push_back(Scalar(-4));
  values.push_back(Scalar(3) * i);
  for (const auto& a : values)
    for (const auto& b : values) {
      const std::string label = a.to_string() + " vs " + b.to_string();
      INFO(label);
      CHECK(multiplier_dependence(a, b, 12) == brute_force(a, b, 12));
    }
}

TEST_CASE("independence check") {
  auto r = independence_check(fn("z^2-6"), pt("3"), fn("z^3-7*z+7"), pt("1"));
  CHECK(r.independent);
  CHECK(r.lambda1 == q(6));
  CHECK(r.lambda2 == q(-4));
  CHECK_FALSE(r.degree_pair);
  CHECK_FALSE(r.multiplier_pair);

  auto uv = independence_check(fn("4*z^2"), pt("1/4"), fn("2*z^2"), pt("1/2"));
  CHECK_FALSE(uv.independent);
  CHECK(uv.degree_pair == ExponentPair{1, 1});
  CHECK(uv.multiplier_pair == ExponentPair{1, 1});

  CHECK_FALSE(independence_check(fn("z^2-6"), pt("3"), fn("z^2-6"), pt("3")).independent);
  CHECK_THROWS_AS(independence_check(fn("z^2"), pt("0"), fn("z^3"), pt("1")), Error);
}

TEST_CASE("theorem conditions on the U∘V example") {
  const auto ok = verify_theorem_conditions(uv_input());
  CHECK(ok.all());
  for (const auto& [name, holds] : ok.conditions) {
    INFO(name);
    CHECK(holds);
  }

  auto wrong_point = uv_input();
  wrong_point.z1 = pt("1");
  CHECK(verify_theorem_conditions(wrong_point).conditions.at("base_values") == false);

  auto wrong_degree = uv_input();
  wrong_degree.d1 = 2;
  const auto wd = verify_theorem_conditions(wrong_degree);
  CHECK(wd.conditions.at("diagram1"));
  CHECK_FALSE(wd.conditions.at("local_degrees"));

  auto broken = uv_input();
  broken.a2 = fn("3*z^2");
  CHECK_FALSE(verify_theorem_conditions(broken).conditions.at("diagram2"));

  auto superattracting = uv_input();
  superattracting.z0 = pt("0");
  CHECK_FALSE(verify_theorem_conditions(superattracting).conditions.at("repelling_fixed_point"));

  auto gcd = uv_input();
  gcd.d1 = 2;
  gcd.d2 = 2;
  CHECK_THROWS_AS(verify_theorem_conditions(gcd), Error);
}

TEST_CASE("Poincaré transport along a semiconjugacy") {
  const auto r = poincare_transport_check(fn("z*(2+z)^2"), fn("z^2"), fn("z*(2+z^2)"), pt("0"), 30);
  CHECK(r.holds);
  CHECK(r.multiplier_relation);
  CHECK(r.lambda_a == q(4));
  CHECK(r.lambda_b == q(2));
  CHECK(r.local_degree == 2);
  CHECK(r.lhs == r.rhs);

  const auto lin = poincare_transport_check(fn("2*z^2"), fn("2*z"), fn("4*z^2"), pt("1/4"), 20);
  CHECK(lin.holds);
  CHECK_THROWS_AS(poincare_transport_check(fn("z^2"), fn("z+1"), fn("z^2"), pt("1"), 10), Error);
}

TEST_CASE("Böttcher transport along a polynomial semiconjugacy") {
  CHECK(transport_boettcher_check(t::poly("z^4"), t::poly("z^2"), t::poly("z^4"), 20, Field::Q).holds);
  const auto t4 = transport_boettcher_check(t::poly("8*z^4-8*z^2+1"), t::poly("2*z^2-1"), t::poly("8*z^4-8*z^2+1"), 20,
                                            Field::Q);
  CHECK(t4.holds);
  CHECK(t4.leading_b == q(1, 2));
  CHECK(t4.leading_a == q(1, 2));
  CHECK(transport_boettcher_check(t::poly("2*z^2-1"), t::poly("4*z^3-3*z"), t::poly("2*z^2-1"), 20, Field::Q).holds);
  CHECK(transport_boettcher_check(t::poly("z*(2+z)^2"), t::poly("z^2"), t::poly("z*(2+z^2)"), 20, Field::Q).holds);
  CHECK_THROWS_AS(transport_boettcher_check(t::poly("z^2"), t::poly("z+1"), t::poly("z^2"), 10, Field::Q), Error);
}
