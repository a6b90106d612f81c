#include <doctest.h>

#include "dynalg/error.hpp"
#include "dynalg/fixed_points.hpp"
#include "support.hpp"

using namespace dynalg;
using t::fn;
using t::pt;
using t::q;

TEST_CASE("parsing") {
  auto a = fn("z^2");
  CHECK(a.numerator() == t::poly("z*z"));
  CHECK(a.denominator() == Polynomial(Scalar(1)));
  CHECK(fn("z*(2+z)^2").to_string() == "z^3+4*z^2+4*z");
  CHECK(fn("(z^2+1)/(z^2+1)") == RationalFunction(Scalar(1)));
  CHECK(fn("(2*z-2)/(4*z^2-4)").to_string() == "(1/2)/(z+1)");
  CHECK(fn("-(z-1)^2") == fn("-z^2+2*z-1"));
  CHECK(fn("3/4i*z") == RationalFunction(Polynomial::monomial(Scalar(mpq_class(0), mpq_class(3, 4)), 1)));
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)parse_ratfunc("z^^2", Field::Q);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_ratfunc("z+", Field::Q), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(z", Field::Q), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("i*z", Field::Q), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("w", Field::Q), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("1/(z-z)", Field::Q), Error);
}

TEST_CASE("print then parse is the identity") {
  for (const char* s : {"z^2", "z*(2+z)^2", "1/z", "(z^2+1)/(z-3)", "2*z^2-1", "(1+i)*z^3-i", "-z/(2*z+1)^2",
                        "1/3*z^5-z+7/2", "(i*z)/(z^2+i)"}) {
    const auto a = fn(s);
    CHECK(fn(a.to_string()) == a);
  }
}

TEST_CASE("composition") {
  CHECK(compose(fn("z^2"), fn("z^3")) == fn("z^6"));
  CHECK(compose(fn("z^2"), fn("z*(2+z^2)")) == fn("z^2*(2+z^2)^2"));
  CHECK(compose(fn("1/z"), fn("1/z")) == fn("z"));
  CHECK_THROWS_AS(compose(fn("z^100"), fn("z^100"), 4096), Error);
}

TEST_CASE("composition is associative") {
  const char* maps[] = {"z^2-1", "1/(z+2)", "(z^2+1)/(z-1)", "3*z-i", "z^3/(2*z^2-1)"};
  for (const char* a : maps)
    for (const char* b : maps)
      for (const char* c : maps) {
        const auto fa = fn(a), fb = fn(b), fc = fn(c);
        CHECK(compose(fa, compose(fb, fc)) == compose(compose(fa, fb), fc));
      }
}

TEST_CASE("composition agrees with pointwise evaluation") {
  const auto a = fn("(z^2+1)/(z-2)"), b = fn("(3*z-1)/(z^2+z+1)");
  const auto ab = compose(a, b);
  for (long k = -5; k <= 5; ++k) {
    const PointP1 z{q(k, 3)};
    CHECK(ab.evaluate(z) == a.evaluate(b.evaluate(z)));
  }
}

TEST_CASE("iterates") {
  CHECK(iterate(fn("z^2"), 3) == fn("z^8"));
  CHECK(iterate(fn("2*z^2-1"), 2) == fn("8*z^4-8*z^2+1"));
  CHECK(iterate(fn("z+1"), 5) == fn("z+5"));
  CHECK_THROWS_AS(iterate(fn("z^2"), 13, 4096), Error);
}

TEST_CASE("derivatives") {
  CHECK(derivative(fn("z^3")) == fn("3*z^2"));
  CHECK(derivative(fn("1/z")) == fn("-1/z^2"));
  CHECK(derivative(fn("z*(2+z)^2")) == fn("(2+z)*(2+3*z)"));
  // Quotient rule against a hand computation.
  CHECK(derivative(fn("z/(z+1)")) == fn("1/(z+1)^2"));
}

TEST_CASE("evaluation on the sphere") {
  CHECK(fn("1/z").evaluate(pt("0")).is_infinity());
  CHECK(fn("1/z").evaluate(pt("inf")) == pt("0"));
  CHECK(fn("(2*z+1)/(z-1)").evaluate(pt("inf")) == pt("2"));
  CHECK(fn("z^2").evaluate(pt("inf")).is_infinity());
}

TEST_CASE("fixed points") {
  auto fz2 = fixed_points(fn("z^2"), Field::Q);
  REQUIRE(fz2.records.size() == 3);
  CHECK(fz2.records[0].point == pt("0"));
  CHECK(fz2.records[0].multiplier == q(0));
  CHECK(fz2.records[1].point == pt("1"));
  CHECK(fz2.records[1].multiplier == q(2));
  CHECK(fz2.records[1].repelling);
  CHECK(fz2.records[2].point.is_infinity());

  auto f6 = fixed_points(fn("z^2-6"), Field::Q);
  REQUIRE(f6.records.size() == 3);
  CHECK(f6.records[0].point == pt("-2"));
  CHECK(f6.records[0].multiplier == q(-4));
  CHECK(f6.records[1].point == pt("3"));
  CHECK(f6.records[1].multiplier == q(6));

  auto ft = fixed_points(fn("2*z^2-1"), Field::Q);
  CHECK(ft.records[0].point == pt("-1/2"));
  CHECK(ft.records[0].multiplier == q(-2));
  CHECK(ft.records[1].multiplier == q(4));

  auto irr = fixed_points(fn("z^2-2"), Field::Q);
  CHECK(irr.records.size() == 3);  // -1, 2 and infinity; z^2 - z - 2 splits
  auto none = fixed_points(fn("z^2+z+2"), Field::Q);
  CHECK(none.unresolved.size() == 1);

  // Multiplier at infinity in the chart 1/z: z + 1/z has lambda = 1 there; 2z has 1/2.
  CHECK(multiplier_at(fn("2*z"), pt("inf")) == q(1, 2));
  CHECK_THROWS_AS(multiplier_at(fn("z^2"), pt("2")), Error);
}

TEST_CASE("multipliers agree with the derivative") {
  for (const char* m : {"z^3-7*z+7", "z^2-6", "(z^2+1)/(2*z)", "z*(2+z)^2"}) {
    const auto a = fn(m);
    for (const auto& r : fixed_points(a, Field::Q).records) {
      if (r.point.is_finite()) CHECK(r.multiplier == derivative(a).evaluate_finite(r.point.value()));
    }
  }
}

TEST_CASE("local degree") {
  CHECK(local_degree(fn("z^2"), pt("0")) == 2);
  CHECK(local_degree(fn("z^2"), pt("1")) == 1);
  CHECK(local_degree(fn("z^2"), pt("inf")) == 2);
  CHECK(local_degree(fn("z*(2+z)^2"), pt("-2")) == 2);
  CHECK(local_degree(fn("z*(2+z)^2"), pt("inf")) == 3);
  CHECK(local_degree(fn("1/z^3"), pt("0")) == 3);
  CHECK(local_degree(fn("(z^2+1)/z"), pt("1")) == 2);  // critical point of z + 1/z
}
