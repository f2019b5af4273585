#include "hochq/field_matrix.hpp"

#include <ostream>
#include <utility>

#include "hochq/error.hpp"

namespace hochq {

FieldMatrix::FieldMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, field_->zero());
}

FieldMatrix FieldMatrix::identity(FieldPtr field, int n) {
  FieldMatrix out(field, n, n);
  for (int i = 0; i < n; ++i) out(i, i) = field->one();
  return out;
}

bool FieldMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

FieldMatrix& FieldMatrix::operator+=(const FieldMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw StructuralError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
  }
  return *this;
}

FieldMatrix& FieldMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix shape mismatch in *");
  FieldMatrix out(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RankKernel rank_kernel(const FieldMatrix& m) {
  FieldMatrix a = m;
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    }
    const auto inv = a(r, c).inverse();
    for (int k = c; k < cols; ++k) {
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const auto f = a(i, c);
      for (int k = c; k < cols; ++k) {
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  RankKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CyclotomicNumber> v(cols, m.field()->zero());
    v[free] = m.field()->one();
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a(i, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rank(const FieldMatrix& m) {
  FieldMatrix a = m;
  const int rows = a.rows();
  const int cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (int k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    }
    const auto pivot = a(r, c);
    for (int i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const auto f = a(i, c);
      for (int k = c; k < cols; ++k) {
        auto lhs = a(i, k).is_zero() ? a(i, k) : a(i, k) * pivot;
        if (!a(r, k).is_zero()) lhs -= f * a(r, k);
        a(i, k) = std::move(lhs);
      }
    }
    ++r;
  }
  return r;
}

std::vector<CyclotomicNumber> multiply_vector(const FieldMatrix& m, const std::vector<CyclotomicNumber>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw StructuralError("vector length mismatch");
  std::vector<CyclotomicNumber> out(m.rows(), m.field()->zero());
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k) {
      if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << "[";
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace hochq
