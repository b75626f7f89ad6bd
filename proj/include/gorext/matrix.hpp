// Dense row-major matrices over F_p.
#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gorext/field.hpp"

namespace gorext {

using Vec = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  const std::vector<Scalar>& data() const noexcept { return data_; }
  std::vector<Scalar>& data() noexcept { return data_; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  std::vector<std::uint64_t> acc(n);
  const std::uint64_t p = F.characteristic();
  // Accumulate unreduced products; fold back whenever the sum could overflow.
  const std::uint64_t budget = UINT64_MAX / ((p - 1) * (p - 1) + 1) - 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar f = a(i, k);
      if (f == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<std::uint64_t>(f) * brow[j];
      if (++used >= budget) {
        for (auto& x : acc) x %= p;
        used = 1;
      }
    }
    auto crow = c.row(i);
    for (std::size_t j = 0; j < n; ++j) crow[j] = static_cast<Scalar>(acc[j] % p);
  }
  return c;
}

inline Vec apply(const PrimeField& F, const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw DimensionError("apply: dimension mismatch");
  Vec out(a.rows(), 0);
  const std::uint64_t p = F.characteristic();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      s += static_cast<std::uint64_t>(r[j]) * v[j];
      if ((j & 1023) == 1023) s %= p;
    }
    out[i] = static_cast<Scalar>(s % p);
  }
  return out;
}

inline Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = F.add(a.data()[k], b.data()[k]);
  return c;
}

inline Matrix subtract(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] = F.sub(a.data()[k], b.data()[k]);
  return c;
}

inline Matrix scale(const PrimeField& F, Scalar s, Matrix a) {
  for (auto& x : a.data()) x = F.mul(s, x);
  return a;
}

inline void add_scaled_inplace(const PrimeField& F, Matrix& acc, Scalar s, const Matrix& a) {
  if (s == 0) return;
  for (std::size_t k = 0; k < acc.data().size(); ++k)
    acc.data()[k] = F.fma(acc.data()[k], s, a.data()[k]);
}

inline Vec add(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.add(a[i], b[i]);
  return c;
}

inline Vec subtract(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.sub(a[i], b[i]);
  return c;
}

inline Vec scale(const PrimeField& F, Scalar s, Vec v) {
  for (auto& x : v) x = F.mul(s, x);
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

/// Rows of all inputs stacked top to bottom; column counts must agree.
inline Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols) throw DimensionError("vstack: column mismatch");
    rows += m.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& m : parts) {
    std::copy(m.data().begin(), m.data().end(), out.data().begin() + r * cols);
    r += m.rows();
  }
  return out;
}

inline Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows) throw DimensionError("hstack: row mismatch");
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      std::copy(m.row(i).begin(), m.row(i).end(), out.row(i).begin() + c0);
    c0 += m.cols();
  }
  return out;
}

inline Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      std::copy(b.row(i).begin(), b.row(i).end(), out.row(r0 + i).begin() + c0);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

/// Copy of the sub-block [r0, r0+nr) x [c0, c0+nc).
inline Matrix block(const Matrix& m, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

inline void set_block(Matrix& m, std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
}

}  // namespace gorext
