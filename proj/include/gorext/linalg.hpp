// Exact elimination over F_p: rank, kernels, images, solving, and
// canonical subspaces/subquotients.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gorext/matrix.hpp"

namespace gorext {

class ContainmentViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Echelon {
  Matrix rref;                      // rank x cols, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination of a copy of `m`.
inline Echelon row_reduce(const PrimeField& F, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    auto prow = m.row(r);
    const Scalar inv = F.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
    // Columns of prow before c are zero; only the tail needs updating.
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j)
      if (prow[j] != 0) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = m(i, c);
      if (f == 0) continue;
      const Scalar nf = F.neg(f);
      auto irow = m.row(i);
      for (std::size_t j : nz) irow[j] = F.fma(irow[j], nf, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  std::copy(m.data().begin(), m.data().begin() + r * cols, out.data().begin());
  return {std::move(out), std::move(pivots)};
}

inline std::size_t rank(const PrimeField& F, const Matrix& m) {
  // Eliminate along the smaller dimension.
  if (m.rows() > m.cols()) return row_reduce(F, transpose(m)).pivots.size();
  return row_reduce(F, m).pivots.size();
}

/// A subspace of F_p^n stored by its reduced row echelon basis, so that
/// equal subspaces have identical representations.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `rows` (any generating set).
  static Subspace span(const PrimeField& F, const Matrix& rows) {
    Echelon e = row_reduce(F, rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(e.rref);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(const PrimeField& F, std::size_t ambient, const std::vector<Vec>& vecs) {
    return span(F, Matrix::from_rows(ambient, vecs));
  }

  static Subspace full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec vector(std::size_t i) const { return Vec(basis_.row(i).begin(), basis_.row(i).end()); }

  /// v minus its component along the pivot columns; zero iff v lies in the span.
  Vec reduce(const PrimeField& F, Vec v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (f == 0) continue;
      const Scalar nf = F.neg(f);
      auto r = basis_.row(i);
      for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] = F.fma(v[j], nf, r[j]);
    }
    return v;
  }

  bool contains(const PrimeField& F, const Vec& v) const { return is_zero(reduce(F, v)); }

  bool contains(const PrimeField& F, const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(F, other.vector(i))) return false;
    return true;
  }

  /// Coordinates of a member with respect to the echelon basis.
  Vec coordinates(const Vec& v) const {
    Vec c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Linear combination of the basis rows.
  Vec combine(const PrimeField& F, const Vec& coords) const {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      auto r = basis_.row(i);
      for (std::size_t j = 0; j < ambient_; ++j) v[j] = F.fma(v[j], coords[i], r[j]);
    }
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {x : m x = 0}.
inline Subspace kernel(const PrimeField& F, const Matrix& m) {
  Echelon e = row_reduce(F, m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.rref(i, f));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(F, cols, vecs);
}

/// Column space of m inside F_p^{rows}.
inline Subspace image(const PrimeField& F, const Matrix& m) { return Subspace::span(F, transpose(m)); }

/// Some x with m x = b, or nullopt.
inline std::optional<Vec> solve(const PrimeField& F, const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(F, aug);
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rref(i, m.cols());
  }
  return x;
}

/// Solve m X = B column by column; nullopt if any column is unsolvable.
inline std::optional<Matrix> solve_many(const PrimeField& F, const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw DimensionError("solve_many: row mismatch");
  Matrix aug = hstack({m, b}, m.rows());
  Echelon e = row_reduce(F, aug);
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.rref(i, m.cols() + j);
  }
  return x;
}

inline Subspace sum(const PrimeField& F, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("sum: ambient mismatch");
  return Subspace::span(F, vstack({a.basis(), b.basis()}, a.ambient()));
}

inline Subspace intersect(const PrimeField& F, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("intersect: ambient mismatch");
  // x in both iff x = u*A = w*B; kernel of [A; -B]^T gives the pairs (u, w).
  Matrix stacked = vstack({a.basis(), scale(F, F.neg(1), b.basis())}, a.ambient());
  Subspace pairs = kernel(F, transpose(stacked));
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    Vec pr = pairs.vector(i);
    Vec u(pr.begin(), pr.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    vecs.push_back(a.combine(F, u));
  }
  return Subspace::span(F, a.ambient(), vecs);
}

/// Image of a subspace under a linear map.
inline Subspace map_subspace(const PrimeField& F, const Matrix& m, const Subspace& s) {
  if (s.dim() == 0) return Subspace(m.rows());
  return Subspace::span(F, transpose(multiply(F, m, transpose(s.basis()))));
}

/// The quotient top/bottom of nested subspaces with a canonical basis of
/// coset representatives: the echelon rows of `top` reduced modulo `bottom`.
class Subquotient {
public:
  Subquotient(const PrimeField& F, Subspace top, Subspace bottom)
      : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.ambient() != bottom_.ambient())
      throw DimensionError("subquotient: ambient mismatch");
    if (!top_.contains(F, bottom_))
      throw ContainmentViolation("subquotient: bottom is not contained in top");
    std::vector<Vec> reduced;
    for (std::size_t i = 0; i < top_.dim(); ++i) reduced.push_back(bottom_.reduce(F, top_.vector(i)));
    reps_ = Subspace::span(F, top_.ambient(), reduced);
  }

  std::size_t dim() const noexcept { return reps_.dim(); }
  const Subspace& top() const noexcept { return top_; }
  const Subspace& bottom() const noexcept { return bottom_; }
  /// Representatives: the rows of this echelon basis; they vanish on bottom's pivots.
  const Subspace& representatives() const noexcept { return reps_; }
  Vec representative(std::size_t i) const { return reps_.vector(i); }

  /// Coordinates of the class of v (v must lie in top).
  Vec coordinates(const PrimeField& F, const Vec& v) const {
    return reps_.coordinates(bottom_.reduce(F, v));
  }

  /// dim x ambient matrix sending v in top to the coordinates of its class.
  Matrix projection(const PrimeField& F) const {
    const std::size_t n = top_.ambient();
    Matrix p(dim(), n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0);
      e[j] = 1;
      Vec c = coordinates(F, e);
      for (std::size_t i = 0; i < dim(); ++i) p(i, j) = c[i];
    }
    return p;
  }

  /// ambient x dim matrix whose columns are the representatives.
  Matrix lift() const { return transpose(reps_.basis()); }

private:
  Subspace top_, bottom_, reps_;
};

inline std::size_t subquotient_dim(const PrimeField& F, const Subspace& top, const Subspace& bottom) {
  return Subquotient(F, top, bottom).dim();
}

}  // namespace gorext
