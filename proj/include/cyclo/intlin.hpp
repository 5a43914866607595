// Exact integer linear algebra: determinants, ranks and lattice counts of
// semiopen bricks.
#pragma once

#include "cyclo/exact.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cyclo::intlin {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<BigInt> entries);

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  /// Each inner vector is one column; all must share the same length.
  static IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& columns, int rows = -1);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  BigInt& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  /// Copy with only the given rows, in the given order.
  IntMatrix select_rows(std::span<const int> rows) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Fraction-free (Bareiss) elimination. Throws InputError on a non-square matrix.
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals.
int rank(const IntMatrix& m);

/// Integer points in {sum a_i v_i : a_i in [0,1)} for the columns v_i.
/// 0 for dependent columns, 1 for no columns; otherwise the gcd of all
/// maximal minors.
BigInt semiopen_lattice_count(const IntMatrix& columns);

}  // namespace cyclo::intlin
