// Finite modules over a LocalAlgebra, equivariant maps, and the
// constructions on them: sums, sub/quotient modules, duals, Hom, tensor.
#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gorext/algebra.hpp"

namespace gorext {

class ModuleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class AlgebraMismatch : public ModuleError {
public:
  using ModuleError::ModuleError;
};

class NotFree : public ModuleError {
public:
  using ModuleError::ModuleError;
};

/// A finite A-module given by one action matrix per basis element of A.
class AModule {
public:
  AModule() = default;

  /// Validates: unit acts as the identity and the actions realize the
  /// multiplication table (which also forces them to commute).
  AModule(LocalAlgebra A, std::vector<Matrix> action) : AModule(std::move(A), std::move(action), Trusted{}) {
    validate();
  }

  /// For modules whose structure is correct by construction.
  static AModule trusted(LocalAlgebra A, std::vector<Matrix> action) {
    return AModule(std::move(A), std::move(action), Trusted{});
  }

  void validate() const {
    const LocalAlgebra& A = algebra();
    const PrimeField& F = A.field();
    const std::size_t n = A.dim(), d = dim();
    if (data_->action.size() != n) throw ModuleError("module needs one action matrix per basis element");
    for (const auto& m : data_->action)
      if (m.rows() != d || m.cols() != d) throw ModuleError("action matrix has wrong shape");
    if (!(action(A.unit()) == Matrix::identity(d))) throw ModuleError("unit does not act as identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Matrix expect(d, d);
        for (std::size_t l = 0; l < n; ++l) add_scaled_inplace(F, expect, A.structure_constant(i, j, l), action(l));
        if (!(gorext::multiply(F, action(i), action(j)) == expect))
          throw ModuleError("action does not respect multiplication");
      }
  }

  const LocalAlgebra& algebra() const noexcept { return data_->alg; }
  const PrimeField& field() const noexcept { return data_->alg.field(); }
  std::size_t dim() const noexcept { return data_->dim; }
  const Matrix& action(std::size_t i) const noexcept { return data_->action[i]; }
  const std::vector<Matrix>& actions() const noexcept { return data_->action; }

  /// Action of the k-span element a.
  Matrix act(const Vec& a) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i) add_scaled_inplace(field(), m, a[i], action(i));
    return m;
  }

  /// Actions of the minimal generators of m.
  const std::vector<Matrix>& generator_actions() const noexcept { return data_->gen_action; }

  /// The submodule mM.
  const Subspace& radical() const noexcept { return data_->radical; }

  /// mu(M) = dim M/mM.
  std::size_t num_generators() const noexcept { return dim() - data_->radical.dim(); }

  /// Elements of M whose classes form a basis of M/mM.
  std::vector<Vec> minimal_generators() const {
    Subquotient top(field(), Subspace::full(dim()), radical());
    std::vector<Vec> g;
    for (std::size_t i = 0; i < top.dim(); ++i) g.push_back(top.representative(i));
    return g;
  }

  bool same_algebra(const AModule& other) const noexcept { return algebra().same_as(other.algebra()); }

private:
  struct Trusted {};
  struct Data {
    LocalAlgebra alg;
    std::size_t dim;
    std::vector<Matrix> action;
    std::vector<Matrix> gen_action;
    Subspace radical;
  };

  AModule(LocalAlgebra A, std::vector<Matrix> action, Trusted) {
    const std::size_t d = action.empty() ? 0 : action.front().rows();
    auto data = std::make_shared<Data>(Data{std::move(A), d, std::move(action), {}, Subspace(d)});
    if (data->action.size() != data->alg.dim()) throw ModuleError("module needs one action matrix per basis element");
    const PrimeField& F = data->alg.field();
    std::vector<Matrix> cols;
    for (const auto& g : data->alg.max_generators()) {
      Matrix m(d, d);
      for (std::size_t i = 0; i < g.size(); ++i) add_scaled_inplace(F, m, g[i], data->action[i]);
      data->gen_action.push_back(m);
      cols.push_back(transpose(m));
    }
    if (d > 0 && !cols.empty()) data->radical = Subspace::span(F, vstack(cols, d));
    data_ = std::move(data);
  }

  std::shared_ptr<const Data> data_;
};

inline void require_same_algebra(const AModule& M, const AModule& N, const char* what) {
  if (!M.same_algebra(N)) throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

/// An A-linear map; `matrix` is dim(target) x dim(source).
class ModuleMap {
public:
  ModuleMap() = default;
  ModuleMap(AModule source, AModule target, Matrix matrix, bool check = true)
      : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
    require_same_algebra(src_, tgt_, "module map");
    if (m_.rows() != tgt_.dim() || m_.cols() != src_.dim()) throw ModuleError("module map: matrix has wrong shape");
    if (check && !is_equivariant()) throw ModuleError("module map does not commute with the action");
  }

  bool is_equivariant() const {
    const PrimeField& F = src_.field();
    for (std::size_t g = 0; g < src_.generator_actions().size(); ++g)
      if (!(gorext::multiply(F, m_, src_.generator_actions()[g]) ==
            gorext::multiply(F, tgt_.generator_actions()[g], m_)))
        return false;
    return true;
  }

  const AModule& source() const noexcept { return src_; }
  const AModule& target() const noexcept { return tgt_; }
  const Matrix& matrix() const noexcept { return m_; }

  std::size_t rank() const { return gorext::rank(src_.field(), m_); }
  bool is_injective() const { return rank() == src_.dim(); }
  bool is_surjective() const { return rank() == tgt_.dim(); }
  bool is_bijective() const { return src_.dim() == tgt_.dim() && is_injective(); }
  Subspace kernel() const { return gorext::kernel(src_.field(), m_); }
  Subspace image() const { return gorext::image(src_.field(), m_); }

private:
  AModule src_, tgt_;
  Matrix m_;
};

inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return ModuleMap(f.source(), g.target(), multiply(f.source().field(), g.matrix(), f.matrix()), false);
}

inline ModuleMap identity_map(const AModule& M) { return ModuleMap(M, M, Matrix::identity(M.dim()), false); }
inline ModuleMap zero_map(const AModule& M, const AModule& N) { return ModuleMap(M, N, Matrix(N.dim(), M.dim()), false); }

// ---------------------------------------------------------------------------
// Basic modules

inline AModule zero_module(const LocalAlgebra& A) {
  return AModule::trusted(A, std::vector<Matrix>(A.dim(), Matrix(0, 0)));
}

inline AModule free_module(const LocalAlgebra& A, std::size_t rank) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < A.dim(); ++i) act.push_back(block_diagonal(std::vector<Matrix>(rank, A.left(i))));
  return AModule::trusted(A, std::move(act));
}

inline AModule regular_module(const LocalAlgebra& A) { return free_module(A, 1); }

inline AModule residue_field_module(const LocalAlgebra& A) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < A.dim(); ++i) act.push_back(Matrix(1, 1, {i == A.unit() ? 1u : 0u}));
  return AModule::trusted(A, std::move(act));
}

/// Hom_k(M, k) with (a.phi)(x) = phi(a x): the transposed actions.
inline AModule k_dual(const AModule& M) {
  std::vector<Matrix> act;
  for (const auto& m : M.actions()) act.push_back(transpose(m));
  return AModule::trusted(M.algebra(), std::move(act));
}

/// D = Hom_k(A, k).
inline AModule dualizing_module(const LocalAlgebra& A) { return k_dual(regular_module(A)); }

inline AModule direct_sum(const std::vector<AModule>& parts) {
  if (parts.empty()) throw ModuleError("direct_sum: empty list");
  for (const auto& p : parts) require_same_algebra(parts.front(), p, "direct_sum");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < parts.front().algebra().dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(i));
    act.push_back(block_diagonal(blocks));
  }
  return AModule::trusted(parts.front().algebra(), std::move(act));
}

inline AModule direct_sum(const AModule& M, const AModule& N) { return direct_sum(std::vector<AModule>{M, N}); }

inline AModule power(const AModule& M, std::size_t r) {
  if (r == 0) return zero_module(M.algebra());
  return direct_sum(std::vector<AModule>(r, M));
}

// ---------------------------------------------------------------------------
// Submodules and quotients

inline bool is_submodule(const AModule& M, const Subspace& S) {
  for (const auto& g : M.generator_actions())
    for (std::size_t i = 0; i < S.dim(); ++i)
      if (!S.contains(M.field(), apply(M.field(), g, S.vector(i)))) return false;
  return true;
}

/// The A-submodule generated by the given elements.
inline Subspace generated_submodule(const AModule& M, const std::vector<Vec>& elems) {
  std::vector<Vec> span;
  for (const auto& v : elems)
    for (std::size_t i = 0; i < M.algebra().dim(); ++i) span.push_back(apply(M.field(), M.action(i), v));
  return Subspace::span(M.field(), M.dim(), span);
}

/// A submodule with basis the echelon basis of S, and its inclusion.
struct Submodule {
  AModule module;
  ModuleMap inclusion;
};

inline Submodule submodule(const AModule& M, const Subspace& S) {
  if (!is_submodule(M, S)) throw ModuleError("submodule: subspace is not A-stable");
  const PrimeField& F = M.field();
  Matrix incl = transpose(S.basis());
  std::vector<Matrix> act;
  for (const auto& a : M.actions()) {
    Matrix img = multiply(F, a, incl);
    Matrix m(S.dim(), S.dim());
    for (std::size_t j = 0; j < S.dim(); ++j) {
      Vec c = S.coordinates(img.column(j));
      for (std::size_t i = 0; i < S.dim(); ++i) m(i, j) = c[i];
    }
    act.push_back(std::move(m));
  }
  AModule sub = AModule::trusted(M.algebra(), std::move(act));
  return {sub, ModuleMap(sub, M, std::move(incl), false)};
}

/// M/S with basis the canonical coset representatives, and the projection.
struct QuotientModule {
  AModule module;
  ModuleMap projection;
  Matrix lift;  // dim M x dim(M/S): the representatives
};

inline QuotientModule quotient(const AModule& M, const Subspace& S) {
  if (!is_submodule(M, S)) throw ModuleError("quotient: subspace is not A-stable");
  const PrimeField& F = M.field();
  Subquotient q(F, Subspace::full(M.dim()), S);
  Matrix proj = q.projection(F);
  Matrix lift = q.lift();
  std::vector<Matrix> act;
  for (const auto& a : M.actions()) act.push_back(multiply(F, proj, multiply(F, a, lift)));
  AModule quo = AModule::trusted(M.algebra(), std::move(act));
  return {quo, ModuleMap(M, quo, std::move(proj), false), std::move(lift)};
}

/// Kernel of x acting on M, i.e. (0 :_M x).
inline Subspace colon_in_module(const AModule& M, const Vec& x) { return kernel(M.field(), M.act(x)); }

// ---------------------------------------------------------------------------
// Presentations: the projective cover A^mu -> M and its kernel.

struct Presentation0 {
  std::vector<Vec> generators;  // minimal generators g_1..g_mu of M
  Matrix cover;                 // dim M x (mu*n): column s*n+i is e_i g_s
  Matrix section;               // (mu*n) x dim M with cover * section = id
  Subspace relations;           // kernel of cover inside A^mu
  std::vector<Vec> relation_generators;  // minimal generators of the relations
};

namespace detail {

// Minimal generators of a submodule S of A^mu given by its subspace.
inline std::vector<Vec> minimal_generators_in_free(const LocalAlgebra& A, std::size_t mu, const Subspace& S) {
  if (S.dim() == 0) return {};
  const PrimeField& F = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> rad;
  for (std::size_t b = 0; b < S.dim(); ++b) {
    Vec v = S.vector(b);
    for (const auto& L : A.max_generator_actions()) {
      Vec w(mu * n, 0);
      for (std::size_t s = 0; s < mu; ++s) {
        Vec part = apply(F, L, std::span<const Scalar>(v.data() + s * n, n));
        std::copy(part.begin(), part.end(), w.begin() + static_cast<std::ptrdiff_t>(s * n));
      }
      rad.push_back(std::move(w));
    }
  }
  Subquotient top(F, S, Subspace::span(F, mu * n, rad));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < top.dim(); ++i) out.push_back(top.representative(i));
  return out;
}

}  // namespace detail

inline Matrix cover_matrix(const AModule& M, const std::vector<Vec>& gens) {
  const std::size_t n = M.algebra().dim();
  Matrix cover(M.dim(), gens.size() * n);
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t i = 0; i < n; ++i) cover.set_column(s * n + i, apply(M.field(), M.action(i), gens[s]));
  return cover;
}

inline Presentation0 presentation(const AModule& M) {
  const PrimeField& F = M.field();
  const LocalAlgebra& A = M.algebra();
  Presentation0 P;
  P.generators = M.minimal_generators();
  P.cover = cover_matrix(M, P.generators);
  const std::size_t mu = P.generators.size();
  auto sec = solve_many(F, P.cover, Matrix::identity(M.dim()));
  if (!sec) throw std::logic_error("presentation: generators do not generate");
  P.section = std::move(*sec);
  P.relations = kernel(F, P.cover);
  P.relation_generators = detail::minimal_generators_in_free(A, mu, P.relations);
  return P;
}

/// The projective cover A^mu -> M.
inline ModuleMap projective_cover(const AModule& M) {
  Presentation0 P = presentation(M);
  return ModuleMap(free_module(M.algebra(), P.generators.size()), M, P.cover, false);
}

// ---------------------------------------------------------------------------
// Hom

/// Hom_A(M, N), realised inside N^mu through the values on the minimal
/// generators of M, cut out by the relations of M.
class HomSpace {
public:
  HomSpace(const AModule& M, const AModule& N) : M_(M), N_(N) {
    require_same_algebra(M, N, "hom_module");
    const PrimeField& F = M.field();
    const std::size_t n = M.algebra().dim(), dN = N.dim();
    pres_ = presentation(M);
    mu_ = pres_.generators.size();
    // Relation r = (r_1..r_mu) forces sum_s r_s y_s = 0.
    std::vector<Matrix> eqs;
    for (const auto& r : pres_.relation_generators) {
      Matrix row(dN, mu_ * dN);
      for (std::size_t s = 0; s < mu_; ++s) {
        Matrix a = N.act(Vec(r.begin() + static_cast<std::ptrdiff_t>(s * n), r.begin() + static_cast<std::ptrdiff_t>((s + 1) * n)));
        set_block(row, 0, s * dN, a);
      }
      eqs.push_back(std::move(row));
    }
    space_ = eqs.empty() ? Subspace::full(mu_ * dN) : gorext::kernel(F, vstack(eqs, mu_ * dN));
    AModule big = power(N, mu_);
    module_ = submodule(big, space_).module;
  }

  const AModule& source() const noexcept { return M_; }
  const AModule& target() const noexcept { return N_; }
  const AModule& module() const noexcept { return module_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const Subspace& values() const noexcept { return space_; }

  /// Matrix (dim N x dim M) of the homomorphism with coordinates c.
  Matrix to_matrix(const Vec& c) const {
    const PrimeField& F = M_.field();
    Vec y = space_.combine(F, c);
    const std::size_t n = M_.algebra().dim(), dN = N_.dim();
    // f(e_i g_s) = e_i y_s
    Matrix onfree(dN, mu_ * n);
    for (std::size_t s = 0; s < mu_; ++s) {
      std::span<const Scalar> ys(y.data() + s * dN, dN);
      for (std::size_t i = 0; i < n; ++i) onfree.set_column(s * n + i, apply(F, N_.action(i), ys));
    }
    return multiply(F, onfree, pres_.section);
  }

  /// Coordinates of an A-linear map f: M -> N.
  Vec from_matrix(const Matrix& f) const {
    const PrimeField& F = M_.field();
    Vec y;
    for (const auto& g : pres_.generators) {
      Vec v = apply(F, f, g);
      y.insert(y.end(), v.begin(), v.end());
    }
    if (!space_.contains(F, y)) throw ModuleError("from_matrix: not an A-linear map");
    return space_.coordinates(y);
  }

  Matrix basis_matrix(std::size_t t) const {
    Vec c(dim(), 0);
    c[t] = 1;
    return to_matrix(c);
  }

private:
  AModule M_, N_;
  Presentation0 pres_;
  std::size_t mu_ = 0;
  Subspace space_;
  AModule module_;
};

inline AModule hom_module(const AModule& M, const AModule& N) { return HomSpace(M, N).module(); }

// ---------------------------------------------------------------------------
// Tensor

/// M (x)_A N as the cokernel of (relations of M) (x) N -> N^mu.
class TensorSpace {
public:
  TensorSpace(const AModule& M, const AModule& N) : M_(M), N_(N) {
    require_same_algebra(M, N, "tensor_module");
    const PrimeField& F = M.field();
    const std::size_t n = M.algebra().dim(), dN = N.dim();
    pres_ = presentation(M);
    mu_ = pres_.generators.size();
    std::vector<Vec> rels;
    for (const auto& r : pres_.relation_generators)
      for (std::size_t b = 0; b < dN; ++b) {
        Vec w(mu_ * dN, 0);
        for (std::size_t s = 0; s < mu_; ++s) {
          Matrix a = N.act(Vec(r.begin() + static_cast<std::ptrdiff_t>(s * n), r.begin() + static_cast<std::ptrdiff_t>((s + 1) * n)));
          Vec col = a.column(b);
          std::copy(col.begin(), col.end(), w.begin() + static_cast<std::ptrdiff_t>(s * dN));
        }
        rels.push_back(std::move(w));
      }
    AModule big = power(N, mu_);
    QuotientModule q = quotient(big, Subspace::span(F, mu_ * dN, rels));
    module_ = q.module;
    proj_ = q.projection.matrix();
  }

  const AModule& module() const noexcept { return module_; }
  std::size_t dim() const noexcept { return module_.dim(); }

  /// Coordinates of x (x) y.
  Vec element(const Vec& x, const Vec& y) const {
    const PrimeField& F = M_.field();
    const std::size_t n = M_.algebra().dim(), dN = N_.dim();
    Vec a = apply(F, pres_.section, x);  // x = sum_s a_s g_s
    Vec w(mu_ * dN, 0);
    for (std::size_t s = 0; s < mu_; ++s) {
      Vec part = apply(F, N_.act(Vec(a.begin() + static_cast<std::ptrdiff_t>(s * n), a.begin() + static_cast<std::ptrdiff_t>((s + 1) * n))), y);
      std::copy(part.begin(), part.end(), w.begin() + static_cast<std::ptrdiff_t>(s * dN));
    }
    return apply(F, proj_, w);
  }

  /// dim(M (x) N) x (dim M * dim N) matrix of the bilinear map on basis pairs,
  /// column i*dim N + j for e_i (x) e_j.
  Matrix pairing_matrix() const {
    Matrix out(dim(), M_.dim() * N_.dim());
    for (std::size_t i = 0; i < M_.dim(); ++i) {
      Vec x(M_.dim(), 0);
      x[i] = 1;
      for (std::size_t j = 0; j < N_.dim(); ++j) {
        Vec y(N_.dim(), 0);
        y[j] = 1;
        out.set_column(i * N_.dim() + j, element(x, y));
      }
    }
    return out;
  }

private:
  AModule M_, N_;
  Presentation0 pres_;
  std::size_t mu_ = 0;
  AModule module_;
  Matrix proj_;
};

inline AModule tensor_module(const AModule& M, const AModule& N) { return TensorSpace(M, N).module(); }

/// M (x)_k N with the diagonal action, modulo am (x) n - m (x) an: the
/// definition taken literally. Quadratic in dim M * dim N; used as an oracle.
inline AModule tensor_module_bruteforce(const AModule& M, const AModule& N) {
  require_same_algebra(M, N, "tensor_module_bruteforce");
  const PrimeField& F = M.field();
  const std::size_t dM = M.dim(), dN = N.dim(), n = M.algebra().dim();
  const std::size_t D = dM * dN;
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < dM; ++a)
      for (std::size_t b = 0; b < dN; ++b) {
        Vec w(D, 0);
        for (std::size_t c = 0; c < dM; ++c) w[c * dN + b] = F.add(w[c * dN + b], M.action(i)(c, a));
        for (std::size_t c = 0; c < dN; ++c) w[a * dN + c] = F.sub(w[a * dN + c], N.action(i)(c, b));
        rels.push_back(std::move(w));
      }
  // Acting on the left factor.
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(D, D);
    for (std::size_t a = 0; a < dM; ++a)
      for (std::size_t b = 0; b < dN; ++b)
        for (std::size_t c = 0; c < dM; ++c) m(c * dN + b, a * dN + b) = M.action(i)(c, a);
    act.push_back(std::move(m));
  }
  AModule big = AModule::trusted(M.algebra(), std::move(act));
  return quotient(big, Subspace::span(F, D, rels)).module;
}

/// Hom_A(M, N) as a subspace of all dim N x dim M matrices. Oracle only.
inline std::size_t hom_dim_bruteforce(const AModule& M, const AModule& N) {
  require_same_algebra(M, N, "hom_dim_bruteforce");
  const PrimeField& F = M.field();
  const std::size_t dM = M.dim(), dN = N.dim(), V = dM * dN;
  std::vector<Matrix> eqs;
  for (std::size_t i = 0; i < M.algebra().dim(); ++i) {
    // f a_M - a_N f = 0, f stored row-major (r, c) -> r*dM + c
    Matrix e(V, V);
    for (std::size_t r = 0; r < dN; ++r)
      for (std::size_t c = 0; c < dM; ++c) {
        const std::size_t row = r * dM + c;
        for (std::size_t k = 0; k < dM; ++k) e(row, r * dM + k) = F.add(e(row, r * dM + k), M.action(i)(k, c));
        for (std::size_t k = 0; k < dN; ++k) e(row, k * dM + c) = F.sub(e(row, k * dM + c), N.action(i)(r, k));
      }
    eqs.push_back(std::move(e));
  }
  return V - rank(F, vstack(eqs, V));
}

// ---------------------------------------------------------------------------
// Maps built from the bifunctors

/// The canonical surjection N (x) N -> S^2(N).
struct SymmetricSquare {
  ModuleMap map;
  std::size_t kernel_dim;
  bool bijective() const { return kernel_dim == 0; }
};

inline SymmetricSquare symmetric_square_map(const AModule& N) {
  const PrimeField& F = N.field();
  TensorSpace T(N, N);
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < N.dim(); ++i)
    for (std::size_t j = i + 1; j < N.dim(); ++j) {
      Vec x(N.dim(), 0), y(N.dim(), 0);
      x[i] = 1;
      y[j] = 1;
      rels.push_back(subtract(F, T.element(x, y), T.element(y, x)));
    }
  // x (x) x terms are symmetric already; only distinct basis pairs matter
  // since the relation is bilinear.
  Subspace K = Subspace::span(F, T.dim(), rels);
  QuotientModule q = quotient(T.module(), K);
  return {q.projection, K.dim()};
}

struct FreeRankOne {
  bool value = false;
  std::optional<Vec> generator;
};

/// N is free of rank one iff it is cyclic and as large as A.
inline FreeRankOne is_free_rank_one(const AModule& N) {
  if (N.num_generators() != 1 || N.dim() != N.algebra().dim()) return {};
  Vec g = N.minimal_generators().front();
  Matrix m = cover_matrix(N, {g});
  if (rank(N.field(), m) != N.dim()) return {};
  return {true, g};
}

/// The natural map M -> Hom(Hom(M, D), D).
inline ModuleMap biduality_map(const AModule& M) {
  const PrimeField& F = M.field();
  AModule D = dualizing_module(M.algebra());
  HomSpace H(M, D);
  HomSpace HH(H.module(), D);
  std::vector<Matrix> basis;
  for (std::size_t t = 0; t < H.dim(); ++t) basis.push_back(H.basis_matrix(t));
  Matrix out(HH.dim(), M.dim());
  for (std::size_t j = 0; j < M.dim(); ++j) {
    Vec x(M.dim(), 0);
    x[j] = 1;
    Matrix ev(D.dim(), H.dim());  // f_t |-> f_t(x)
    for (std::size_t t = 0; t < H.dim(); ++t) ev.set_column(t, apply(F, basis[t], x));
    out.set_column(j, HH.from_matrix(ev));
  }
  return ModuleMap(M, HH.module(), std::move(out));
}

// ---------------------------------------------------------------------------
// Coinduction along a base change

/// Hom_P(Q, P) as a Q-module. An element f is recorded by its values
/// f(q_1), ..., f(q_r) on the P-basis of Q.
struct Coinduced {
  AModule module;
  FreeBasis basis;
};

inline Coinduced coinduced_with_basis(const BaseChange& B) {
  auto fb = free_basis_over_base(B);
  if (!fb) throw NotFree("coinduced: Q is not free over P");
  const LocalAlgebra& P = B.base();
  const LocalAlgebra& Q = B.total();
  const PrimeField& F = P.field();
  const std::size_t r = fb->rank, np = P.dim(), d = r * np;
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < Q.dim(); ++i) {
    Matrix m(d, d);
    for (std::size_t s = 0; s < r; ++s) {
      // e_i q_s = sum_t phi(p_st) q_t
      Vec c = *solve(F, fb->iso, apply(F, Q.left(i), fb->basis[s]));
      for (std::size_t t = 0; t < r; ++t) {
        Vec pst(c.begin() + static_cast<std::ptrdiff_t>(t * np), c.begin() + static_cast<std::ptrdiff_t>((t + 1) * np));
        set_block(m, s * np, t * np, P.mult_matrix(pst));
      }
    }
    act.push_back(std::move(m));
  }
  return {AModule::trusted(Q, std::move(act)), std::move(*fb)};
}

inline AModule coinduced(const BaseChange& B) { return coinduced_with_basis(B).module; }

inline bool frobenius_test(const BaseChange& B) { return is_free_rank_one(coinduced(B)).value; }

/// The canonical map k (x)_P Hom_P(Q, P) -> Hom_k(Q/pQ, k).
struct BaseChangeDualCheck {
  std::size_t source_dim = 0;  // dim of Hom_P(Q,P)/p Hom_P(Q,P)
  std::size_t target_dim = 0;  // dim Q/pQ
  std::size_t rank = 0;
  bool bijective() const { return source_dim == target_dim && rank == target_dim; }
};

inline BaseChangeDualCheck base_change_dual_check(const BaseChange& B) {
  Coinduced C = coinduced_with_basis(B);
  const LocalAlgebra& P = B.base();
  const PrimeField& F = P.field();
  const std::size_t r = C.basis.rank, np = P.dim();
  const Subspace pQ = B.extended_max();
  Subquotient fiber(F, Subspace::full(B.total().dim()), pQ);

  // p C: spanned by the action of p on C, i.e. values multiplied by p.
  std::vector<Vec> pc;
  for (auto j : P.maxideal())
    for (std::size_t b = 0; b < C.module.dim(); ++b) {
      Vec v(C.module.dim(), 0);
      for (std::size_t s = 0; s < r; ++s) {
        Vec vs(np, 0);
        if (b / np == s) vs[b % np] = 1;
        Vec w = apply(F, P.left(j), vs);
        std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(s * np));
      }
      pc.push_back(std::move(v));
    }
  BaseChangeDualCheck out;
  out.source_dim = C.module.dim() - Subspace::span(F, C.module.dim(), pc).dim();
  out.target_dim = fiber.dim();

  // f |-> (class of x |-> residue of f(x)) on representatives x of Q/pQ.
  Matrix m(out.target_dim, C.module.dim());
  for (std::size_t a = 0; a < fiber.dim(); ++a) {
    Vec x = fiber.representative(a);
    Vec c = *solve(F, C.basis.iso, x);  // x = sum_t phi(p_t) q_t
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t i = 0; i < np; ++i) {
        // f with f(q_s) = e_i: f(x) = p_s e_i, residue = res(p_s) res(e_i)
        const Scalar ps_res = c[s * np + P.unit()];
        m(a, s * np + i) = i == P.unit() ? ps_res : 0;
      }
  }
  out.rank = rank(F, m);
  return out;
}

/// The artinian form of the symmetric-square criterion: if N (x) N -> S^2 N
/// is bijective, N is cyclic and dim N = dim A, then N is free of rank one.
struct SymmetricSquareCriterion {
  bool symmetric_square_bijective = false;
  bool cyclic = false;
  bool full_length = false;
  bool free_rank_one = false;
  bool hypotheses_hold() const { return symmetric_square_bijective && cyclic && full_length; }
  bool consistent() const { return !hypotheses_hold() || free_rank_one; }
};

inline SymmetricSquareCriterion symmetric_square_criterion(const AModule& N) {
  SymmetricSquareCriterion c;
  c.symmetric_square_bijective = symmetric_square_map(N).bijective();
  c.cyclic = N.num_generators() == 1;
  c.full_length = N.dim() == N.algebra().dim();
  c.free_rank_one = is_free_rank_one(N).value;
  return c;
}

// ---------------------------------------------------------------------------
// Random modules for property tests and sweeps

/// A^r modulo a few random relations inside m A^r, optionally dualized.
template <class Rng>
AModule random_module(const LocalAlgebra& A, Rng& rng, std::size_t max_dim) {
  const PrimeField& F = A.field();
  const std::size_t n = A.dim();
  auto draw = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t r = 1 + draw(3);
    AModule Fr = free_module(A, r);
    std::vector<Vec> rels;
    const std::size_t nrel = draw(2 * r + 2);
    for (std::size_t k = 0; k < nrel; ++k) {
      Vec v(r * n, 0);
      for (std::size_t s = 0; s < r; ++s)
        for (auto j : A.maxideal()) v[s * n + j] = static_cast<Scalar>(draw(F.characteristic()));
      rels.push_back(std::move(v));
    }
    AModule M = quotient(Fr, generated_submodule(Fr, rels)).module;
    if (M.dim() == 0 || M.dim() > max_dim) continue;
    if (draw(3) == 0) M = k_dual(M);
    return M;
  }
  return residue_field_module(A);
}

}  // namespace gorext
