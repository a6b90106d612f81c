#include <doctest.h>

#include <chrono>

#include "dynalg/error.hpp"
#include "dynalg/fixed_points.hpp"
#include "dynalg/solvers.hpp"
#include "support.hpp"

using namespace dynalg;
using t::fn;
using t::pt;
using t::q;

namespace {

Scalar frac(const mpz_class& num, const mpz_class& den) { return Scalar(mpq_class(num, den)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("power series arithmetic") {
  TruncatedPowerSeries a({q(1), q(1), q(1)});
  CHECK(series_substitute_power(a, 2).coefficients() == std::vector<Scalar>{q(1), q(0), q(1)});
  TruncatedPowerSeries longer({q(1), q(1), q(1), q(0), q(0)});
  CHECK(series_substitute_power(longer, 2).coefficients() == std::vector<Scalar>{q(1), q(0), q(1), q(0), q(1)});
  CHECK(series_substitute_power(a, 1) == a);

  // 1 / (1 - z) = 1 + z + z^2 + ...
  TruncatedPowerSeries one({q(1), q(0), q(0), q(0)});
  TruncatedPowerSeries omz({q(1), q(-1), q(0), q(0)});
  CHECK(series_divide(one, omz).coefficients() == std::vector<Scalar>{q(1), q(1), q(1), q(1)});
  CHECK(series_divide(omz, omz) == one);
}

TEST_CASE("Poincaré series of z^2 at 1 is exp") {
  const auto p = poincare_series(fn("z^2"), pt("1"), 4);
  CHECK(p.coefficients() == std::vector<Scalar>{q(1), q(1), q(1, 2), q(1, 6), q(1, 24)});
  const auto p20 = poincare_series(fn("z^2"), pt("1"), 20);
  for (int k = 0; k <= 20; ++k) CHECK(p20[k] == frac(1, t::factorial(static_cast<unsigned>(k))));
  CHECK(poincare_residual(fn("z^2"), p20, q(2)).is_zero());
}

TEST_CASE("Poincaré series of 2z^2-1 at 1 is cosh(sqrt(2z))") {
  const auto p = poincare_series(fn("2*z^2-1"), pt("1"), 20);
  for (int k = 0; k <= 20; ++k) {
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    CHECK(p[k] == frac(two_k, t::factorial(static_cast<unsigned>(2 * k))));
  }
  CHECK(poincare_residual(fn("2*z^2-1"), p, q(4)).is_zero());
}

TEST_CASE("Poincaré series of 4z^2 at 1/4 is e^{4z}/4") {
  const auto p = poincare_series(fn("4*z^2"), pt("1/4"), 15);
  for (int k = 0; k <= 15; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    CHECK(p[k] == frac(four_k, 4 * t::factorial(static_cast<unsigned>(k))));
  }
}

TEST_CASE("Poincaré residual vanishes for assorted repelling points") {
  struct Case {
    const char* map;
    const char* point;
  };
  for (auto c : {Case{"z^3-7*z+7", "1"}, Case{"z^2-6", "3"}, Case{"z^2-6", "-2"}, Case{"(z^2+1)/(2*z)", "inf"},
                 Case{"z*(2+z)^2", "0"}, Case{"(z^2-3)/(z+1)", "-3"}}) {
    const std::string label = std::string(c.map) + " at " + c.point;
    INFO(label);
    const auto a = fn(c.map);
    const auto z0 = pt(c.point);
    if (z0.is_infinity()) {
      CHECK(code_of([&] { poincare_series(a, z0, 10); }) == ErrorCode::PreconditionFailed);
      continue;
    }
    const Scalar lambda = multiplier_at(a, z0);
    const auto p = poincare_series(a, z0, 25);
    CHECK(p[0] == z0.value());
    CHECK(p[1] == q(1));
    CHECK(poincare_residual(a, p, lambda).is_zero());
  }
}

TEST_CASE("Poincaré error cases") {
  CHECK(code_of([] { poincare_series(fn("z^2"), pt("0"), 5); }) == ErrorCode::ZeroMultiplier);
  CHECK(code_of([] { poincare_series(fn("z^2"), pt("2"), 5); }) == ErrorCode::NotAFixedPoint);
  CHECK(code_of([] { poincare_series(fn("z^2+z"), pt("0"), 5); }) == ErrorCode::ResonantMultiplier);
  CHECK(code_of([] { poincare_series(fn("-z+z^2"), pt("0"), 5); }) == ErrorCode::ResonantMultiplier);
}

TEST_CASE("transport of a Poincaré series by a conjugacy") {
  // X = 2z carries the series of 4z^2 at 1/4 to a series of 2z^2 at 1/2.
  const auto p = poincare_series(fn("4*z^2"), pt("1/4"), 20);
  const auto moved = transport_poincare(fn("2*z"), p);
  CHECK(moved[0] == q(1, 2));
  CHECK(moved == Scalar(2) * p);
  CHECK(poincare_residual(fn("2*z^2"), moved, q(2)).is_zero());
  CHECK(transport_poincare(fn("z"), p) == p);
  CHECK(code_of([&] { transport_poincare(fn("1/(z-1/4)"), p); }) == ErrorCode::PoleAtBasePoint);
}

TEST_CASE("Böttcher series") {
  auto sq = boettcher_series(t::poly("z^2"), 4, Field::Q);
  CHECK(sq.a == std::vector<Scalar>{q(1), q(0), q(0), q(0), q(0), q(0)});

  auto ch = boettcher_series(t::poly("2*z^2-1"), 20, Field::Q);
  REQUIRE(ch.a.size() == 22);
  CHECK(ch.a[0] == q(1, 2));
  CHECK(ch.a[1] == q(0));
  CHECK(ch.a[2] == q(1, 2));
  for (std::size_t k = 3; k < ch.a.size(); ++k) CHECK(ch.a[k].is_zero());
  CHECK(boettcher_residual(t::poly("2*z^2-1"), ch).vanishes_through(boettcher_residual_top(t::poly("2*z^2-1"), ch)));

  auto m2 = boettcher_series(t::poly("z^2-2"), 10, Field::Q);  // z + 1/z
  CHECK(m2.a[0] == q(1));
  CHECK(m2.a[2] == q(1));
  CHECK(m2.a[3].is_zero());

  CHECK(code_of([] { boettcher_series(t::poly("2*z^3"), 2, Field::Q); }) == ErrorCode::LeadingCoefficientNotSolvable);
  CHECK(boettcher_series(t::poly("3*z^2"), 2, Field::Q).a[0] == q(1, 3));
  auto gi = boettcher_series(t::poly("-z^3"), 3, Field::Qi);
  CHECK(gi.a[0] * gi.a[0] == q(-1));
  auto other = boettcher_series(t::poly("-z^3"), 3, Field::Qi, -gi.a[0]);
  CHECK(other.a[0] == -gi.a[0]);
  CHECK(code_of([] { boettcher_series(t::poly("z^2"), 3, Field::Q, q(2)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { boettcher_series(t::poly("z+1"), 3, Field::Q); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("Böttcher residual vanishes for generic polynomials") {
  for (const char* m : {"z^2+1/4", "z^2-6", "z^3-7*z+7", "4*z^2+z", "z^4-z+1/2", "1/4*z^3+z^2"}) {
    INFO(m);
    const auto p = t::poly(m);
    // Only maps whose leading coefficient has an (n-1)-th root in Q.
    if (kth_roots_in_field(p.leading().inverse(), p.degree() - 1, Field::Q).empty()) continue;
    const auto b = boettcher_series(p, 18, Field::Q);
    CHECK(boettcher_residual(p, b).vanishes_through(boettcher_residual_top(p, b)));
  }
}

TEST_CASE("solver runtime") {
  const auto start = std::chrono::steady_clock::now();
  (void)poincare_series(fn("z^3-7*z+7"), pt("1"), 60);
  (void)boettcher_series(t::poly("z^3-7*z+7"), 60, Field::Q);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 5.0);
}
