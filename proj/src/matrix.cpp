#include "dynalg/matrix.hpp"

#include "dynalg/factor.hpp"

namespace dynalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::left_columns(std::size_t count) const {
  Matrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

std::size_t gaussian_bits(const GaussianInt& g) {
  std::size_t a = sgn(g.re) ? mpz_sizeinbase(g.re.get_mpz_t(), 2) : 0;
  std::size_t b = sgn(g.im) ? mpz_sizeinbase(g.im.get_mpz_t(), 2) : 0;
  return a > b ? a : b;
}

GaussianInt exact_quotient(const GaussianInt& a, const GaussianInt& b) {
  if (b.im == 0 && mpz_divisible_p(a.re.get_mpz_t(), b.re.get_mpz_t()) &&
      mpz_divisible_p(a.im.get_mpz_t(), b.re.get_mpz_t())) {
    GaussianInt q{a.re, a.im};
    mpz_divexact(q.re.get_mpz_t(), q.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), q.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  GaussianInt q;
  if (!gaussian_divides(a, b, q)) throw Error(ErrorCode::InvalidArgument, "Bareiss step was not exact");
  return q;
}

// Scales each row by the lcm of its denominators so every entry lies in Z[i].
std::vector<std::vector<GaussianInt>> integral_rows(const Matrix& m) {
  std::vector<std::vector<GaussianInt>> rows(m.rows(), std::vector<GaussianInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      rows[r][c].re = s.re().get_num() * (l / s.re().get_den());
      rows[r][c].im = s.im().get_num() * (l / s.im().get_den());
    }
  }
  return rows;
}

}  // namespace

EchelonForm echelon(const Matrix& m) {
  auto a = integral_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  EchelonForm out;
  GaussianInt prev{1, 0};
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t r = row; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      std::size_t bits = gaussian_bits(a[r][col]);
      if (best == rows || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    std::swap(a[row], a[best]);
    const GaussianInt pivot = a[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      const GaussianInt factor = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = exact_quotient(pivot * a[r][c] - factor * a[row][c], prev);
      }
      a[r][col] = GaussianInt{};
    }
    // Entries stay minors of the original matrix, so the next division is exact.
    prev = pivot;
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = Matrix(row, cols);
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.reduced(r, c) = a[r][c].to_scalar();
  return out;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  EchelonForm e = echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v(cols);
    v[free_col] = Scalar(1);
    for (std::size_t k = e.pivot_columns.size(); k-- > 0;) {
      std::size_t pc = e.pivot_columns[k];
      Scalar acc;
      for (std::size_t c = pc + 1; c < cols; ++c)
        if (!v[c].is_zero() && !e.reduced(k, c).is_zero()) acc += e.reduced(k, c) * v[c];
      v[pc] = -acc / e.reduced(k, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dynalg
