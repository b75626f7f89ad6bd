// Bounded chain complexes of A-modules: shifts, truncations, Hom and
// tensor total complexes, homology, Koszul complexes.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gorext/module.hpp"

namespace gorext {

class ComplexError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Scalar sign(const PrimeField& F, long long e) { return (e % 2 == 0) ? 1u : F.neg(1); }

/// Modules M_lo..M_hi with differentials d_i: M_i -> M_{i-1}; zero outside.
class ChainComplex {
public:
  ChainComplex() = default;

  /// `diffs[k]` is d_{lo+k}; d_lo (into degree lo-1) must be a 0-row matrix
  /// or may be omitted, in which case diffs has size hi-lo.
  ChainComplex(LocalAlgebra A, int lo, std::vector<AModule> modules, std::vector<Matrix> diffs, bool check = true)
      : alg_(std::move(A)), lo_(lo), mods_(std::move(modules)) {
    const std::size_t len = mods_.size();
    if (len > 0 && diffs.size() + 1 == len) diffs.insert(diffs.begin(), Matrix(0, mods_[0].dim()));
    if (diffs.size() != len) throw ComplexError("complex: differential count mismatch");
    diffs_ = std::move(diffs);
    for (std::size_t k = 0; k < len; ++k) {
      if (!mods_[k].algebra().same_as(alg_)) throw AlgebraMismatch("complex: module over a different algebra");
      const std::size_t rows = k ? mods_[k - 1].dim() : 0;
      if (diffs_[k].rows() != rows || diffs_[k].cols() != mods_[k].dim())
        throw ComplexError("complex: differential d_" + std::to_string(lo_ + static_cast<int>(k)) + " has wrong shape");
    }
    if (check) validate();
  }

  static ChainComplex zero(const LocalAlgebra& A) { return ChainComplex(A, 0, {}, {}, false); }

  static ChainComplex single(const AModule& M, int degree = 0) {
    return ChainComplex(M.algebra(), degree, {M}, {}, false);
  }

  /// Checks d o d = 0 and that each differential is A-linear.
  void validate() const {
    const PrimeField& F = alg_.field();
    for (int i = lo_ + 1; i <= hi(); ++i) {
      if (!ModuleMap(module(i), module(i - 1), d(i), false).is_equivariant())
        throw ComplexError("complex: d_" + std::to_string(i) + " is not A-linear");
      if (i - 1 > lo_ && !gorext::multiply(F, d(i - 1), d(i)).is_zero())
        throw ComplexError("complex: d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " != 0");
    }
  }

  const LocalAlgebra& algebra() const noexcept { return alg_; }
  const PrimeField& field() const noexcept { return alg_.field(); }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(mods_.size()) - 1; }
  bool empty_window() const noexcept { return mods_.empty(); }

  bool in_window(int i) const noexcept { return i >= lo_ && i <= hi(); }

  AModule module(int i) const { return in_window(i) ? mods_[static_cast<std::size_t>(i - lo_)] : zero_module(alg_); }
  std::size_t dim(int i) const { return in_window(i) ? mods_[static_cast<std::size_t>(i - lo_)].dim() : 0; }

  /// d_i : M_i -> M_{i-1}.
  Matrix d(int i) const {
    if (in_window(i) && in_window(i - 1)) return diffs_[static_cast<std::size_t>(i - lo_)];
    return Matrix(dim(i - 1), dim(i));
  }

  /// Smallest window containing all nonzero modules, or nullopt if zero.
  std::optional<std::pair<int, int>> support() const {
    std::optional<int> a, b;
    for (int i = lo_; i <= hi(); ++i)
      if (dim(i) > 0) {
        if (!a) a = i;
        b = i;
      }
    if (!a) return std::nullopt;
    return std::make_pair(*a, *b);
  }

private:
  LocalAlgebra alg_ = field_algebra(PrimeField(2));
  int lo_ = 0;
  std::vector<AModule> mods_;
  std::vector<Matrix> diffs_;
};

/// Builds a complex on the window [lo, hi] from callbacks.
template <class ModFn, class DiffFn>
ChainComplex make_complex(const LocalAlgebra& A, int lo, int hi, ModFn mod, DiffFn diff, bool check = true) {
  if (hi < lo) return ChainComplex(A, lo, {}, {}, false);
  std::vector<AModule> mods;
  std::vector<Matrix> diffs;
  for (int i = lo; i <= hi; ++i) mods.push_back(mod(i));
  for (int i = lo; i <= hi; ++i) diffs.push_back(i == lo ? Matrix(0, mods.front().dim()) : diff(i));
  return ChainComplex(A, lo, std::move(mods), std::move(diffs), check);
}

/// Levelwise maps alpha_i: M_i -> N_i commuting with the differentials.
class ComplexMap {
public:
  ComplexMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> components, bool check = true)
      : src_(std::move(source)), tgt_(std::move(target)), comp_(std::move(components)) {
    for (auto& [i, m] : comp_)
      if (m.rows() != tgt_.dim(i) || m.cols() != src_.dim(i))
        throw ComplexError("complex map: component " + std::to_string(i) + " has wrong shape");
    if (check) validate();
  }

  void validate() const {
    const PrimeField& F = src_.field();
    const int lo = std::min(src_.lo(), tgt_.lo()), hi = std::max(src_.hi(), tgt_.hi());
    for (int i = lo; i <= hi; ++i) {
      if (!ModuleMap(src_.module(i), tgt_.module(i), at(i), false).is_equivariant())
        throw ComplexError("complex map: component " + std::to_string(i) + " is not A-linear");
      if (!(gorext::multiply(F, tgt_.d(i), at(i)) == gorext::multiply(F, at(i - 1), src_.d(i))))
        throw ComplexError("complex map does not commute with differentials in degree " + std::to_string(i));
    }
  }

  const ChainComplex& source() const noexcept { return src_; }
  const ChainComplex& target() const noexcept { return tgt_; }
  Matrix at(int i) const {
    auto it = comp_.find(i);
    if (it != comp_.end()) return it->second;
    return Matrix(tgt_.dim(i), src_.dim(i));
  }

  static ComplexMap identity(const ChainComplex& C) {
    std::map<int, Matrix> m;
    for (int i = C.lo(); i <= C.hi(); ++i) m[i] = Matrix::identity(C.dim(i));
    return ComplexMap(C, C, std::move(m), false);
  }

private:
  ChainComplex src_, tgt_;
  std::map<int, Matrix> comp_;
};

// ---------------------------------------------------------------------------
// Shifts and truncations

/// (S^n M)_i = M_{i-n} with differential (-1)^n d_{i-n}.
inline ChainComplex shift(const ChainComplex& M, int n) {
  const PrimeField& F = M.field();
  const Scalar s = sign(F, n);
  return make_complex(
      M.algebra(), M.lo() + n, M.hi() + n, [&](int i) { return M.module(i - n); },
      [&](int i) { return scale(F, s, M.d(i - n)); }, false);
}

struct HardTruncations {
  ChainComplex below;  // M_{<n}, a subcomplex
  ChainComplex above;  // M_{>=n} = M / M_{<n}
};

inline HardTruncations hard_truncations(const ChainComplex& M, int n) {
  const LocalAlgebra& A = M.algebra();
  auto mod = [&](int i) { return M.module(i); };
  auto dif = [&](int i) { return M.d(i); };
  ChainComplex below = n > M.lo() ? make_complex(A, M.lo(), std::min(M.hi(), n - 1), mod, dif, false) : ChainComplex::zero(A);
  ChainComplex above = n <= M.hi() ? make_complex(A, std::max(M.lo(), n), M.hi(), mod, dif, false) : ChainComplex::zero(A);
  return {below, above};
}

/// tau_{<=n}: M_i for i < n, M_n / Im d_{n+1} in degree n, zero above.
inline ChainComplex smart_truncation(const ChainComplex& M, int n) {
  const LocalAlgebra& A = M.algebra();
  const PrimeField& F = M.field();
  if (n >= M.hi()) return M;
  if (n < M.lo()) return ChainComplex::zero(A);
  QuotientModule top = quotient(M.module(n), image(F, M.d(n + 1)));
  return make_complex(
      A, M.lo(), n, [&](int i) { return i == n ? top.module : M.module(i); },
      [&](int i) { return i == n ? multiply(F, M.d(n), top.lift) : M.d(i); }, false);
}

/// tau_{>=n}: Ker d_n in degree n, M_i for i > n.
inline ChainComplex smart_truncation_above(const ChainComplex& M, int n) {
  const LocalAlgebra& A = M.algebra();
  const PrimeField& F = M.field();
  if (n <= M.lo()) return M;
  if (n > M.hi()) return ChainComplex::zero(A);
  Submodule z = submodule(M.module(n), kernel(F, M.d(n)));
  const Subspace& Zs = kernel(F, M.d(n));
  return make_complex(
      A, n, M.hi(), [&](int i) { return i == n ? z.module : M.module(i); },
      [&](int i) {
        if (i != n + 1) return M.d(i);
        Matrix img = M.d(n + 1);
        Matrix out(Zs.dim(), img.cols());
        for (std::size_t j = 0; j < img.cols(); ++j) {
          Vec c = Zs.coordinates(img.column(j));
          for (std::size_t r = 0; r < c.size(); ++r) out(r, j) = c[r];
        }
        return out;
      },
      false);
}

// ---------------------------------------------------------------------------
// Homology

struct HomologyGroup {
  int degree;
  Subquotient group;  // Ker d_i / Im d_{i+1}
  std::size_t dim() const { return group.dim(); }
};

inline HomologyGroup homology_at(const ChainComplex& M, int i) {
  const PrimeField& F = M.field();
  Subspace Z = M.dim(i) ? kernel(F, M.d(i)) : Subspace(0);
  Subspace B = M.dim(i) ? image(F, M.d(i + 1)) : Subspace(0);
  return {i, Subquotient(F, Z, B)};
}

inline std::vector<HomologyGroup> homology(const ChainComplex& M) {
  std::vector<HomologyGroup> out;
  for (int i = M.lo(); i <= M.hi(); ++i) out.push_back(homology_at(M, i));
  return out;
}

inline std::size_t homology_dim(const ChainComplex& M, int i) { return homology_at(M, i).dim(); }

/// H_i(M) as an A-module; `lift` sends its basis to the cycle representatives.
struct HomologyModule {
  AModule module;
  Matrix lift;  // dim M_i x dim H_i
};

inline HomologyModule homology_module(const ChainComplex& M, int i) {
  const PrimeField& F = M.field();
  HomologyGroup h = homology_at(M, i);
  const AModule Mi = M.module(i);
  Matrix lift = h.group.lift();
  std::vector<Matrix> act;
  for (const auto& a : Mi.actions()) {
    Matrix img = multiply(F, a, lift);
    Matrix m(h.dim(), h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c) m.set_column(c, h.group.coordinates(F, img.column(c)));
    act.push_back(std::move(m));
  }
  return {AModule::trusted(M.algebra(), std::move(act)), std::move(lift)};
}

/// The map H_i(alpha) in the canonical bases.
inline Matrix homology_map(const ComplexMap& a, int i) {
  const PrimeField& F = a.source().field();
  HomologyGroup hs = homology_at(a.source(), i), ht = homology_at(a.target(), i);
  Matrix m(ht.dim(), hs.dim());
  for (std::size_t c = 0; c < hs.dim(); ++c) {
    Vec img = apply(F, a.at(i), hs.group.representative(c));
    Vec co = ht.group.coordinates(F, img);
    for (std::size_t r = 0; r < co.size(); ++r) m(r, c) = co[r];
  }
  return m;
}

inline bool is_quasi_iso(const ComplexMap& a) {
  const int lo = std::min(a.source().lo(), a.target().lo()), hi = std::max(a.source().hi(), a.target().hi());
  for (int i = lo; i <= hi; ++i) {
    Matrix h = homology_map(a, i);
    if (h.rows() != h.cols() || rank(a.source().field(), h) != h.rows()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Linear maps out of tensor products

/// The linear map T -> target determined by its values on the pairs
/// e_a (x) e_b; `values` has one column per pair (a-major).
inline Matrix induced_on_tensor(const PrimeField& F, const TensorSpace& T, const Matrix& values) {
  Matrix P = T.pairing_matrix();
  auto right_inv = solve_many(F, P, Matrix::identity(P.rows()));
  if (!right_inv) throw std::logic_error("tensor pairing is not surjective");
  return multiply(F, values, *right_inv);
}

/// f (x) g : M (x) N -> M' (x) N'.
inline Matrix tensor_maps(const TensorSpace& src, const TensorSpace& tgt, const AModule& M, const AModule& N,
                          const Matrix& f, const Matrix& g) {
  const PrimeField& F = M.field();
  Matrix values(tgt.dim(), M.dim() * N.dim());
  for (std::size_t a = 0; a < M.dim(); ++a)
    for (std::size_t b = 0; b < N.dim(); ++b)
      values.set_column(a * N.dim() + b, tgt.element(f.column(a), g.column(b)));
  return induced_on_tensor(F, src, values);
}

// ---------------------------------------------------------------------------
// Hom and tensor complexes

/// Hom(M, N)_n = prod_i Hom(M_i, N_{i+n}), with d(b) = d^N b - (-1)^n b d^M.
class HomComplex {
public:
  HomComplex(const ChainComplex& M, const ChainComplex& N) : M_(M), N_(N) {
    if (!M.algebra().same_as(N.algebra())) throw AlgebraMismatch("hom_complex: different algebras");
    const PrimeField& F = M.field();
    lo_ = N.lo() - M.hi();
    hi_ = N.hi() - M.lo();
    for (int n = lo_; n <= hi_; ++n) {
      std::vector<Piece> pieces;
      std::size_t off = 0;
      for (int i = M.lo(); i <= M.hi(); ++i) {
        const int j = i + n;
        if (!N.in_window(j)) continue;
        HomSpace H(M.module(i), N.module(j));
        pieces.push_back({i, j, off, H});
        off += H.dim();
      }
      degrees_.push_back({std::move(pieces), off});
    }
    std::vector<AModule> mods;
    std::vector<Matrix> diffs;
    for (int n = lo_; n <= hi_; ++n) {
      const auto& deg = degree(n);
      std::vector<AModule> parts;
      for (const auto& p : deg.pieces) parts.push_back(p.hom.module());
      mods.push_back(parts.empty() ? zero_module(M.algebra()) : direct_sum(parts));
      if (n == lo_) {
        diffs.push_back(Matrix(0, deg.dim));
        continue;
      }
      const auto& below = degree(n - 1);
      Matrix D(below.dim, deg.dim);
      const Scalar s = F.neg(sign(F, n));
      for (const auto& p : deg.pieces)
        for (std::size_t t = 0; t < p.hom.dim(); ++t) {
          Matrix beta = p.hom.basis_matrix(t);  // M_i -> N_j
          // component into Hom(M_i, N_{j-1}): d^N_j beta
          // component into Hom(M_{i+1}, N_j): -(-1)^n beta d^M_{i+1}
          for (const auto& q : below.pieces) {
            Matrix val;
            if (q.i == p.i && q.j == p.j - 1) val = multiply(F, N.d(p.j), beta);
            else if (q.i == p.i + 1 && q.j == p.j) val = scale(F, s, multiply(F, beta, M.d(p.i + 1)));
            else continue;
            Vec c = q.hom.from_matrix(val);
            for (std::size_t r = 0; r < c.size(); ++r) D(q.offset + r, p.offset + t) = c[r];
          }
        }
      diffs.push_back(std::move(D));
    }
    complex_ = ChainComplex(M.algebra(), lo_, std::move(mods), std::move(diffs), false);
  }

  struct Piece {
    int i, j;  // Hom(M_i, N_j)
    std::size_t offset;
    HomSpace hom;
  };
  struct Degree {
    std::vector<Piece> pieces;
    std::size_t dim;
  };

  const ChainComplex& complex() const noexcept { return complex_; }
  const Degree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n - lo_)); }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }

  /// Matrix of the piece Hom(M_i, N_{i+n}) of an element of degree n.
  Matrix component(int n, const Vec& x, int i) const {
    for (const auto& p : degree(n).pieces)
      if (p.i == i) {
        Vec c(x.begin() + static_cast<std::ptrdiff_t>(p.offset), x.begin() + static_cast<std::ptrdiff_t>(p.offset + p.hom.dim()));
        return p.hom.to_matrix(c);
      }
    return Matrix(N_.dim(i + n), M_.dim(i));
  }

  /// Element of degree n from its components (missing ones are zero).
  Vec from_components(int n, const std::map<int, Matrix>& comps) const {
    Vec x(degree(n).dim, 0);
    for (const auto& p : degree(n).pieces) {
      auto it = comps.find(p.i);
      if (it == comps.end()) continue;
      Vec c = p.hom.from_matrix(it->second);
      std::copy(c.begin(), c.end(), x.begin() + static_cast<std::ptrdiff_t>(p.offset));
    }
    return x;
  }

private:
  ChainComplex M_, N_;
  int lo_ = 0, hi_ = -1;
  std::vector<Degree> degrees_;
  ChainComplex complex_;
};

inline ChainComplex hom_complex(const ChainComplex& M, const ChainComplex& N) { return HomComplex(M, N).complex(); }

/// (L (x) M)_n = sum_{h+i=n} L_h (x) M_i with d(a(x)b) = da (x) b + (-1)^h a (x) db.
class TensorComplex {
public:
  TensorComplex(const ChainComplex& L, const ChainComplex& M) : L_(L), M_(M) {
    if (!L.algebra().same_as(M.algebra())) throw AlgebraMismatch("tensor_complex: different algebras");
    const PrimeField& F = L.field();
    lo_ = L.lo() + M.lo();
    hi_ = L.hi() + M.hi();
    for (int n = lo_; n <= hi_; ++n) {
      std::vector<Piece> pieces;
      std::size_t off = 0;
      for (int h = L.lo(); h <= L.hi(); ++h) {
        const int i = n - h;
        if (!M.in_window(i)) continue;
        TensorSpace T(L.module(h), M.module(i));
        pieces.push_back({h, i, off, T});
        off += T.dim();
      }
      degrees_.push_back({std::move(pieces), off});
    }
    std::vector<AModule> mods;
    std::vector<Matrix> diffs;
    for (int n = lo_; n <= hi_; ++n) {
      const auto& deg = degree(n);
      std::vector<AModule> parts;
      for (const auto& p : deg.pieces) parts.push_back(p.tensor.module());
      mods.push_back(parts.empty() ? zero_module(L.algebra()) : direct_sum(parts));
      if (n == lo_) {
        diffs.push_back(Matrix(0, deg.dim));
        continue;
      }
      const auto& below = degree(n - 1);
      Matrix D(below.dim, deg.dim);
      for (const auto& p : deg.pieces) {
        const AModule Lh = L.module(p.h), Mi = M.module(p.i);
        if (p.tensor.dim() == 0) continue;
        for (const auto& q : below.pieces) {
          Matrix block;
          if (q.h == p.h - 1 && q.i == p.i) {
            block = tensor_maps(p.tensor, q.tensor, Lh, Mi, L.d(p.h), Matrix::identity(Mi.dim()));
          } else if (q.h == p.h && q.i == p.i - 1) {
            block = tensor_maps(p.tensor, q.tensor, Lh, Mi, Matrix::identity(Lh.dim()), M.d(p.i));
            block = scale(F, sign(F, p.h), block);
          } else {
            continue;
          }
          set_block(D, q.offset, p.offset, block);
        }
      }
      diffs.push_back(std::move(D));
    }
    complex_ = ChainComplex(L.algebra(), lo_, std::move(mods), std::move(diffs), false);
  }

  struct Piece {
    int h, i;  // L_h (x) M_i
    std::size_t offset;
    TensorSpace tensor;
  };
  struct Degree {
    std::vector<Piece> pieces;
    std::size_t dim;
  };

  const ChainComplex& complex() const noexcept { return complex_; }
  const Degree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n - lo_)); }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }

  /// Coordinates of x (x) y with x in L_h and y in M_{n-h}.
  Vec element(int h, const Vec& x, int i, const Vec& y) const {
    const auto& deg = degree(h + i);
    Vec out(deg.dim, 0);
    for (const auto& p : deg.pieces)
      if (p.h == h) {
        Vec c = p.tensor.element(x, y);
        std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(p.offset));
      }
    return out;
  }

private:
  ChainComplex L_, M_;
  int lo_ = 0, hi_ = -1;
  std::vector<Degree> degrees_;
  ChainComplex complex_;
};

inline ChainComplex tensor_complex(const ChainComplex& L, const ChainComplex& M) {
  return TensorComplex(L, M).complex();
}

// ---------------------------------------------------------------------------
// Koszul complex on the minimal generators of m

inline ChainComplex koszul_complex(const LocalAlgebra& A) {
  const PrimeField& F = A.field();
  const auto& gens = A.max_generator_actions();
  const std::size_t e = gens.size(), n = A.dim();
  // subsets of {0..e-1} by size, as bitmasks in increasing order
  std::vector<std::vector<unsigned>> subsets(e + 1);
  for (unsigned mask = 0; mask < (1u << e); ++mask) subsets[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  auto index_of = [&](std::size_t p, unsigned mask) {
    const auto& v = subsets[p];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
  };
  return make_complex(
      A, 0, static_cast<int>(e), [&](int p) { return free_module(A, subsets[static_cast<std::size_t>(p)].size()); },
      [&](int p) {
        const auto pp = static_cast<std::size_t>(p);
        Matrix D(subsets[pp - 1].size() * n, subsets[pp].size() * n);
        for (std::size_t c = 0; c < subsets[pp].size(); ++c) {
          const unsigned S = subsets[pp][c];
          int pos = 0;
          for (std::size_t j = 0; j < e; ++j) {
            if (!(S & (1u << j))) continue;
            const std::size_t r = index_of(pp - 1, S & ~(1u << j));
            Matrix blockm = scale(F, sign(F, pos), gens[j]);
            set_block(D, r * n, c * n, blockm);
            ++pos;
          }
        }
        return D;
      });
}

// ---------------------------------------------------------------------------
// Random complexes for property tests

/// A random A-linear map M -> N.
template <class Rng>
Matrix random_module_map(const AModule& M, const AModule& N, Rng& rng) {
  HomSpace H(M, N);
  Vec c(H.dim());
  for (auto& x : c) x = static_cast<Scalar>(rng() % M.field().characteristic());
  return H.to_matrix(c);
}

/// A complex on [lo, lo+len-1] built downward-up: each new module maps
/// randomly into the cycles of the previous differential.
template <class Rng>
ChainComplex random_complex(const LocalAlgebra& A, Rng& rng, int lo, int len, std::size_t max_dim) {
  const PrimeField& F = A.field();
  std::vector<AModule> mods;
  std::vector<Matrix> diffs;
  for (int k = 0; k < len; ++k) {
    AModule N = random_module(A, rng, max_dim);
    if (k == 0) {
      mods.push_back(N);
      diffs.push_back(Matrix(0, N.dim()));
      continue;
    }
    const AModule& prev = mods.back();
    Subspace Z = kernel(F, diffs.back());
    Submodule cyc = submodule(prev, Z);
    Matrix g = random_module_map(N, cyc.module, rng);
    diffs.push_back(multiply(F, cyc.inclusion.matrix(), g));
    mods.push_back(N);
  }
  return ChainComplex(A, lo, std::move(mods), std::move(diffs), true);
}

}  // namespace gorext
