#include <doctest.h>

#include "dynalg/error.hpp"
#include "dynalg/orbifold.hpp"
#include "support.hpp"

using namespace dynalg;
using t::fn;
using t::q;

namespace {

Orbifold orb(const char* s) { return parse_orbifold(s, Field::Q); }

Scalar chi_oracle(std::initializer_list<int> nus) {
  mpq_class c = 2;
  for (int v : nus) c += mpq_class(1, v) - 1;
  return Scalar(c);
}

}  // namespace

TEST_CASE("Euler characteristic") {
  CHECK(euler_char(orb("0:2,inf:2")) == q(1));
  CHECK(euler_char(orb("0:2,1:2,-1:2,inf:2")) == q(0));
  CHECK(euler_char(orb("")) == q(2));
  struct Sig {
    const char* text;
    std::initializer_list<int> nus;
  };
  for (const auto& s : {Sig{"0:3,1:3,inf:3", {3, 3, 3}}, Sig{"0:2,1:4,inf:4", {2, 4, 4}}, Sig{"0:2,1:3,inf:6", {2, 3, 6}},
                        Sig{"0:5,inf:5", {5, 5}}, Sig{"0:2,1:2,inf:7", {2, 2, 7}}, Sig{"0:2,1:3,inf:5", {2, 3, 5}},
                        Sig{"0:7", {7}}, Sig{"0:2,1:2,2:2,3:2,inf:2", {2, 2, 2, 2, 2}}}) {
    const std::string label = s.text;
    INFO(label);
    CHECK(euler_char(orb(s.text)) == chi_oracle(s.nus));
  }
}

TEST_CASE("orbifold parsing and validation") {
  CHECK(orb("inf:2,0:2").to_string() == "0:2,inf:2");
  CHECK(orb("0:2,inf:3").nu(PointP1::infinity()) == 3);
  CHECK(orb("0:2").nu(PointP1(q(5))) == 1);
  CHECK_THROWS_AS(orb("0:1"), Error);
  CHECK_THROWS_AS(orb("0:2,0:3"), Error);
  CHECK_THROWS_AS(orb("0"), Error);
}

TEST_CASE("covering maps") {
  CHECK(is_covering_map(fn("z^2"), orb(""), orb("0:2,inf:2"), Field::Q).holds);
  CHECK_FALSE(is_covering_map(fn("z^2"), orb("0:2"), orb("0:2,inf:2"), Field::Q).holds);
  CHECK(is_covering_map(fn("z"), orb("0:2,1:3"), orb("0:2,1:3"), Field::Q).holds);
  CHECK(is_covering_map(fn("(z^2+1)/(2*z)"), orb("0:3,inf:3"), orb("1:2,-1:2,inf:3"), Field::Q).holds);
  // Preimages of 1 under z^2 + 3 are irrational; they are still accounted for exactly.
  CHECK_FALSE(is_covering_map(fn("z^2+3"), orb(""), orb("1:2,inf:2"), Field::Q).holds);
}

TEST_CASE("chi is multiplicative on verified coverings") {
  struct Case {
    const char* f;
    const char* o1;
    const char* o2;
  };
  int verified = 0;
  for (const auto& c : {Case{"z^2", "", "0:2,inf:2"}, Case{"z^3", "", "0:3,inf:3"}, Case{"z^2", "0:2,inf:2", "0:4,inf:4"},
                        Case{"(z^2+1)/(2*z)", "0:3,inf:3", "1:2,-1:2,inf:3"}, Case{"z", "0:2,1:2,-1:2,inf:2", "0:2,1:2,-1:2,inf:2"},
                        Case{"(z^2+1)/(2*z)", "0:2,inf:2", "1:2,-1:2,inf:2"}}) {
    const auto f = fn(c.f);
    const auto o1 = orb(c.o1), o2 = orb(c.o2);
    const auto check = is_covering_map(f, o1, o2, Field::Q);
    REQUIRE(check.holds);
    ++verified;
    CHECK(euler_char(o1) == Scalar(f.degree()) * euler_char(o2));
  }
  CHECK(verified == 6);
}

TEST_CASE("holomorphic maps: inequality and subsumption chain") {
  const char* maps[] = {"z^2", "z^3", "z*(2+z)^2", "(z^2+1)/(2*z)", "2*z^2-1", "z^2-6", "1/z^2"};
  const char* orbs[] = {"", "0:2", "0:2,inf:2", "0:3,inf:3", "0:4,inf:4", "1:2,-1:2", "1:2,-1:2,inf:2", "-1:2,1:2,inf:3",
                        "0:2,inf:4", "-2:2,0:2,inf:2"};
  int holomorphic = 0, coverings = 0;
  for (const char* m : maps)
    for (const char* a : orbs)
      for (const char* b : orbs) {
        const auto f = fn(m);
        const auto o1 = orb(a), o2 = orb(b);
        const bool cov = is_covering_map(f, o1, o2, Field::Q).holds;
        const bool minimal = is_minimal_holomorphic(f, o1, o2, Field::Q).holds;
        const bool hol = is_holomorphic_map(f, o1, o2, Field::Q).holds;
        const std::string label = std::string(m) + " : " + a + " -> " + b;
        INFO(label);
        if (cov) CHECK(minimal);
        if (minimal) CHECK(hol);
        if (hol) {
          ++holomorphic;
          const Scalar lhs = euler_char(o1), rhs = euler_char(o2) * Scalar(f.degree());
          CHECK((canonical_less(lhs, rhs) || lhs == rhs));
          CHECK((lhs == rhs) == cov);
        }
        if (cov) ++coverings;
      }
  CHECK(holomorphic > 20);
  CHECK(coverings > 3);
}

TEST_CASE("minimal holomorphic maps") {
  CHECK(is_minimal_holomorphic(fn("z*(2+z)^2"), orb("0:2,inf:2"), orb("0:2,inf:2"), Field::Q).holds);
  CHECK_FALSE(is_minimal_holomorphic(fn("z^2"), orb("0:2,inf:2"), orb("0:2,inf:2"), Field::Q).holds);
  CHECK(is_minimal_holomorphic(fn("z"), orb("0:3,5:2"), orb("0:3,5:2"), Field::Q).holds);
}

TEST_CASE("generalized Lattès check") {
  const auto a = fn("z*(2+z)^2");
  const auto good = check_generalized_lattes(a, orb("0:2,inf:2"), Field::Q);
  CHECK(good.holds);
  CHECK(good.chi == q(1));
  CHECK(good.chi_nonnegative);
  CHECK_FALSE(check_generalized_lattes(fn("z^2-6"), orb("0:2,inf:2"), Field::Q).holds);
  // A single cone point passes the equations; the detector skips such bad signatures.
  CHECK(check_generalized_lattes(a, orb("0:2"), Field::Q).holds);
  CHECK_THROWS_AS(check_generalized_lattes(fn("z^2"), orb(""), Field::Q), Error);
  CHECK_THROWS_AS(check_generalized_lattes(fn("z+1"), orb("0:2"), Field::Q), Error);

  for (const char* bad : {"0:2,inf:6", "0:6,inf:2", "0:2,inf:3", "0:3,inf:3", "0:4,inf:4", "-2:2,0:2,inf:2", "0:2,1:2,inf:2",
                          "1:2,inf:2", "-1:2,0:2", "-2:2,inf:2"}) {
    const std::string label = bad;
    INFO(label);
    CHECK_FALSE(check_generalized_lattes(a, orb(bad), Field::Q).holds);
  }
}

TEST_CASE("Lattès property passes to the second iterate") {
  struct Case {
    const char* map;
    const char* o;
  };
  for (const auto& c : {Case{"z*(2+z)^2", "0:2,inf:2"}, Case{"2*z^2-1", "-1:2,1:2"}, Case{"z^2", "0:3,inf:3"},
                        Case{"z*(1+z)^3", "0:3,inf:3"}, Case{"z*((z+3)/(z-1))^2", "0:2,inf:2"}}) {
    const std::string label = c.map;
    INFO(label);
    const auto a = fn(c.map);
    const auto o = orb(c.o);
    REQUIRE(check_generalized_lattes(a, o, Field::Q).holds);
    CHECK(check_generalized_lattes(compose(a, a), o, Field::Q).holds);
  }
}

TEST_CASE("bounded Lattès detection") {
  const auto a = detect_generalized_lattes(fn("z*(2+z)^2"), 4, 6, Field::Q);
  REQUIRE(a.found);
  CHECK(a.found->to_string() == "0:2,inf:2");
  CHECK_FALSE(a.log.empty());
  CHECK(a.log.back().accepted);

  const auto b = detect_generalized_lattes(fn("z^2-6"), 6, 6, Field::Q);
  CHECK_FALSE(b.found);
  for (const auto& e : b.log) CHECK_FALSE(e.reason.empty());

  const auto c = detect_generalized_lattes(fn("z^2"), 2, 6, Field::Q);
  CHECK_FALSE(c.found);
  CHECK(c.special == std::optional<std::string>("power map z^2"));

  const auto d = detect_generalized_lattes(fn("z^3-7*z+7"), 4, 6, Field::Q);
  CHECK_FALSE(d.warnings.empty());
}

TEST_CASE("special polynomial recognition") {
  CHECK(recognize_special_polynomial(fn("z^3")) == std::optional<std::string>("power map z^3"));
  CHECK(recognize_special_polynomial(fn("(z-1)^4+1")) == std::optional<std::string>("power map z^4"));
  CHECK(recognize_special_polynomial(fn("2*z^2-1")) == std::optional<std::string>("Chebyshev T_2"));
  CHECK(recognize_special_polynomial(fn("z^2-2")) == std::optional<std::string>("Chebyshev T_2"));
  CHECK(recognize_special_polynomial(fn("4*z^3-3*z")).has_value());
  CHECK(recognize_special_polynomial(fn("-(4*z^3-3*z)")).has_value());
  CHECK(recognize_special_polynomial(fn("8*z^4-8*z^2+1")).has_value());
  CHECK_FALSE(recognize_special_polynomial(fn("z^2-6")));
  CHECK_FALSE(recognize_special_polynomial(fn("z^3-7*z+7")));
  CHECK_FALSE(recognize_special_polynomial(fn("1/z^2")));
}
