#include <doctest.h>

#include "dynalg/error.hpp"
#include "dynalg/factor.hpp"
#include "dynalg/matrix.hpp"
#include "dynalg/roots.hpp"
#include "support.hpp"

using namespace dynalg;
using t::q;

TEST_CASE("scalar field operations") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  const Scalar i = Scalar::imaginary_unit();
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK_THROWS_AS(q(2, 3) / Scalar(0), Error);
  try {
    (void)(q(2, 3) / Scalar(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK(i.pow(4) == Scalar(1));
  CHECK(q(-3, 4).to_string() == "-3/4");
  CHECK(parse_scalar("3/4i", Field::Qi) == Scalar(mpq_class(0), mpq_class(3, 4)));
  CHECK_THROWS(parse_scalar("i", Field::Q));
}

TEST_CASE("scalar printing round trips") {
  for (const char* s : {"0", "7", "-5/3", "i", "-i", "2+3i", "1/2-1/3i"}) {
    const Scalar v = parse_scalar(s, Field::Qi);
    CHECK(parse_scalar(v.to_string(), Field::Qi) == v);
  }
}

TEST_CASE("square roots in the field") {
  Scalar r;
  CHECK(sqrt_in_field(q(9, 4), Field::Q, r));
  CHECK(r * r == q(9, 4));
  CHECK_FALSE(sqrt_in_field(q(2), Field::Q, r));
  CHECK_FALSE(sqrt_in_field(q(-1), Field::Q, r));
  REQUIRE(sqrt_in_field(q(-1), Field::Qi, r));
  CHECK(r * r == q(-1));
  REQUIRE(sqrt_in_field(Scalar(mpq_class(0), mpq_class(2)), Field::Qi, r));  // (1+i)^2 = 2i
  CHECK(r * r == Scalar(mpq_class(0), mpq_class(2)));
}

TEST_CASE("nullspace and rank") {
  CHECK(nullspace(Matrix::identity(2)).empty());
  auto ns = nullspace(Matrix::from_rows({{q(1), q(-1)}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == ns[0][1]);

  auto ns2 = nullspace(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}));
  REQUIRE(ns2.size() == 1);
  CHECK(ns2[0][0] == Scalar(-2) * ns2[0][1]);

  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 3)) == 0);
  CHECK(rank(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}, {q(3), q(6)}})) == 1);
}

TEST_CASE("rank plus nullity equals columns, and kernel vectors are annihilated") {
  // Deterministic pseudo-random integer matrices with planted dependencies.
  unsigned long seed = 12345;
  auto next = [&] {
    seed = seed * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((seed >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + static_cast<std::size_t>(trial % 4), cols = 3 + static_cast<std::size_t>(trial % 3);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(next());
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) + Scalar(2) * m(1, c);
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const auto& v : ns) {
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("integer and gaussian factorization") {
  auto f = factor_integer(mpz_class(360));
  mpz_class back = 1;
  for (const auto& [p, e] : f) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    back *= pe;
  }
  CHECK(back == 360);
  CHECK(f.size() == 3);
  CHECK(positive_divisors(mpz_class(12)).size() == 6);

  for (const GaussianInt& g : {GaussianInt{2, 0}, GaussianInt{-4, 0}, GaussianInt{3, 4}, GaussianInt{0, 6}}) {
    const auto gf = factor_gaussian(g);
    GaussianInt prod{1, 0};
    for (int k = 0; k < gf.unit_power; ++k) prod = prod * GaussianInt{0, 1};
    for (const auto& [p, e] : gf.primes)
      for (int k = 0; k < e; ++k) prod = prod * p;
    CHECK(prod == g);
  }
}

TEST_CASE("exact roots") {
  auto r = exact_roots(t::poly("z^2-z-6"), Field::Q);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].first == q(-2));
  CHECK(r.roots[1].first == q(3));
  CHECK(r.unresolved.empty());

  auto s = exact_roots(t::poly("z^2+1"), Field::Q);
  CHECK(s.roots.empty());
  CHECK(s.unresolved.size() == 1);
  CHECK(exact_roots(t::poly("z^2+1"), Field::Qi).roots.size() == 2);

  auto m = exact_roots(t::poly("(z-1)^3*(2*z+1)*(z^2-7)"), Field::Q);
  REQUIRE(m.roots.size() == 2);
  CHECK(m.roots[0] == std::make_pair(q(-1, 2), 1));
  CHECK(m.roots[1] == std::make_pair(q(1), 3));
  REQUIRE(m.unresolved.size() == 1);
  CHECK(m.unresolved[0] == t::poly("z^2-7"));
}

TEST_CASE("kth roots") {
  CHECK(kth_roots_in_field(q(1, 8), 3, Field::Q) == std::vector<Scalar>{q(1, 2)});
  CHECK(kth_roots_in_field(q(1, 2), 2, Field::Q).empty());
  CHECK(kth_roots_in_field(q(1), 4, Field::Qi).size() == 4);
  CHECK(preferred_root(kth_roots_in_field(q(1), 2, Field::Q)) == q(1));
}
