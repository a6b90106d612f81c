#pragma once

#include <gmpxx.h>

#include <string>

#include "dynalg/parser.hpp"
#include "dynalg/rational_function.hpp"

namespace t {

inline dynalg::RationalFunction fn(const std::string& s) { return dynalg::parse_ratfunc(s, dynalg::Field::Qi); }
inline dynalg::Polynomial poly(const std::string& s) { return fn(s).as_polynomial(); }
inline dynalg::PointP1 pt(const std::string& s) { return dynalg::parse_point(s, dynalg::Field::Qi); }
inline dynalg::Scalar q(long a, long b = 1) { return dynalg::Scalar::ratio(a, b); }

inline mpz_class factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// Determinant by plain Gaussian elimination over mpq; independent of the library's Bareiss code.
inline mpq_class det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace t
