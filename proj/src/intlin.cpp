#include "cyclo/intlin.hpp"

#include "cyclo/combinatorics.hpp"

#include <utility>

namespace cyclo::intlin {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw InputError("matrix entry count does not match rows x cols");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<std::int64_t>>& columns, int rows) {
  const int c = static_cast<int>(columns.size());
  const int r = c ? static_cast<int>(columns[0].size()) : rows;
  if (r < 0) throw InputError("row count unknown for a matrix without columns");
  IntMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(columns[j].size()) != r) throw InputError("ragged matrix columns");
    for (int i = 0; i < r; ++i) m(i, j) = static_cast<long>(columns[j][i]);
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::select_rows(std::span<const int> rows) const {
  IntMatrix out(static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) out(static_cast<int>(i), j) = (*this)(rows[i], j);
  return out;
}

namespace {

// In-place Bareiss elimination over all columns; returns the rank and the
// sign of the row permutation used. On return, for a square full-rank matrix,
// a(n-1, n-1) holds the determinant up to that sign.
int bareiss(IntMatrix& a, int& sign) {
  const int rows = a.rows(), cols = a.cols();
  sign = 1;
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  // Bareiss with pivoting on the diagonal only: a zero column pivot means det 0.
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int rank(const IntMatrix& m) {
  IntMatrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

BigInt semiopen_lattice_count(const IntMatrix& columns) {
  const int k = columns.cols(), n = columns.rows();
  if (k == 0) return 1;
  if (k > n || rank(columns) < k) return 0;
  BigInt g = 0;
  for_each_combination(n, k, [&](std::span<const int> rows) {
    if (g == 1) return;
    g = gcd(g, determinant(columns.select_rows(rows)));
  });
  return abs(g);
}

}  // namespace cyclo::intlin
