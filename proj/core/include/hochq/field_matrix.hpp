#pragma once

#include <iosfwd>
#include <vector>

#include "hochq/cyclotomic.hpp"

namespace hochq {

/// Dense matrix over a single cyclotomic field, row-major.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, int rows, int cols);
  static FieldMatrix identity(FieldPtr field, int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  CyclotomicNumber& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const CyclotomicNumber& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  FieldMatrix& operator+=(const FieldMatrix& rhs);
  FieldMatrix& operator*=(const Rational& c);
  /// Skips zero entries, so sparse factors are cheap.
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CyclotomicNumber> data_;
};

struct RankKernel {
  int rank = 0;
  /// Column vectors spanning the kernel, one per free column.
  std::vector<std::vector<CyclotomicNumber>> kernel;
};

/// Gauss-Jordan elimination with field inverses, pivoting on the first
/// nonzero entry of each column.
RankKernel rank_kernel(const FieldMatrix& m);

/// Rank by division-free elimination (row_j <- p row_j - f row_i), which
/// needs no field inverses.
int rank(const FieldMatrix& m);

/// m * v for a column vector v.
std::vector<CyclotomicNumber> multiply_vector(const FieldMatrix& m, const std::vector<CyclotomicNumber>& v);

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

}  // namespace hochq
