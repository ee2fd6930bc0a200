#include "lrs/matrix.hpp"

#include <numeric>
#include <utility>

#include "lrs/error.hpp"

namespace lrs {
namespace {

struct Elimination {
  std::vector<std::vector<BigInt>> a;  // augmented, upper triangular after run
  std::vector<std::size_t> column_of;  // column permutation
  std::size_t rank = 0;
  int sign = 1;                        // from row/column swaps
  BigInt row_scale = 1;                // product of denominator-clearing factors
};

// Integer matrix with each row multiplied by the lcm of its denominators
// (including the rhs entry when present).
Elimination prepare(const ExactMatrix& m, std::span<const Rational> rhs) {
  Elimination e;
  const std::size_t n = m.rows();
  const std::size_t width = m.cols() + (rhs.empty() ? 0 : 1);
  e.a.assign(n, std::vector<BigInt>(width));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    if (!rhs.empty()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      e.a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    if (!rhs.empty()) e.a[i][m.cols()] = rhs[i].numerator() * (l / rhs[i].denominator());
    e.row_scale *= l;
  }
  e.column_of.resize(m.cols());
  std::iota(e.column_of.begin(), e.column_of.end(), std::size_t{0});
  return e;
}

// Bareiss elimination over the first `cols` columns with full pivoting. The
// pivot is the entry of largest magnitude in the remaining block.
void eliminate(Elimination& e, std::size_t cols) {
  const std::size_t n = e.a.size();
  const std::size_t width = e.a.empty() ? 0 : e.a[0].size();
  BigInt previous = 1;
  for (std::size_t k = 0; k < std::min(n, cols); ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (abs(e.a[i][j]) > abs(e.a[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (e.a[pr][pc] == 0) return;
    if (pr != k) {
      std::swap(e.a[pr], e.a[k]);
      e.sign = -e.sign;
    }
    if (pc != k) {
      for (auto& row : e.a) std::swap(row[pc], row[k]);
      std::swap(e.column_of[pc], e.column_of[k]);
      e.sign = -e.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        e.a[i][j] = (e.a[i][j] * e.a[k][k] - e.a[i][k] * e.a[k][j]) / previous;
      }
      e.a[i][k] = 0;
    }
    previous = e.a[k][k];
    e.rank = k + 1;
  }
}

void require_square(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_argument, "matrix must be square");
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
}

Rational determinant(const ExactMatrix& m) {
  require_square(m);
  Elimination e = prepare(m, {});
  eliminate(e, m.cols());
  if (e.rank < m.rows()) return Rational(0);
  // The last Bareiss pivot is the determinant of the scaled matrix.
  BigInt det = e.a[m.rows() - 1][m.cols() - 1] * e.sign;
  return Rational(det, e.row_scale);
}

std::vector<Rational> solve(const ExactMatrix& m, std::span<const Rational> rhs) {
  require_square(m);
  if (rhs.size() != m.rows()) throw Error(ErrorCode::invalid_argument, "rhs length does not match matrix");
  Elimination e = prepare(m, rhs);
  const std::size_t n = m.rows();
  eliminate(e, n);
  if (e.rank < n) {
    throw Error(ErrorCode::singular_system, "matrix is singular (determinant 0); no unique solution");
  }
  std::vector<Rational> y(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(e.a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(e.a[i][j]) * y[j];
    y[i] = acc / Rational(e.a[i][i]);
  }
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) x[e.column_of[j]] = y[j];
  return x;
}

}  // namespace lrs
