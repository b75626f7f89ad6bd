// Free resolutions and the numerical shadows of Ext and Tor.
//
// Two engines live here. resolve_complex builds explicit semiprojective
// resolutions of bounded complexes (and so minimal free resolutions of
// modules); it is what the complex-level operations use. The syzygy graph
// only tracks modules up to isomorphism: syzygies are computed as abstract
// modules, split into summands, and summands are identified with earlier
// ones through explicit isomorphisms. Since Omega is additive, Ext and Tor
// dimensions then follow from a small graph of summand classes even when
// the Betti numbers grow exponentially.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "gorext/complex.hpp"

namespace gorext {

class BoundExceeded : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// ---------------------------------------------------------------------------
// Explicit resolutions

struct FreeResolution {
  ChainComplex complex;                // F_i = A^{b_i} on [start, bound]
  ChainComplex target;                 // the resolved complex
  std::map<int, Matrix> augmentation;  // F_i -> target_i
  int start = 0;                       // inf F = inf H(target); > bound if H = 0 below the bound
  int bound = 0;
  bool minimal = false;

  std::size_t betti(int i) const { return complex.dim(i) / complex.algebra().dim(); }
  ComplexMap augmentation_map() const { return ComplexMap(complex, target, augmentation, false); }
};

/// Whether every differential of a complex of free modules has image in m F.
inline bool is_minimal_free_complex(const ChainComplex& F) {
  for (int i = F.lo() + 1; i <= F.hi(); ++i) {
    const AModule Fi = F.module(i - 1);
    const Subspace& rad = Fi.radical();
    Matrix d = F.d(i);
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!rad.contains(F.field(), d.column(c))) return false;
  }
  return true;
}

/// Semiprojective resolution F -> M of a bounded complex, computed through
/// homological degree B.
///
/// Degree by degree, with V_i = F_{i-1} + M_i, the relative cycles
///   Z_i = {(z, x) in V_i : d z = 0, phi z = d x}
/// must all become relative boundaries (d f, phi f + d y). So F_i is free on
/// minimal generators of Z_i modulo mZ_i + (0 + d M_{i+1}), with d_i and
/// phi_i the two coordinates of the generators. This makes the mapping cone
/// exact in every degree <= B. For a module it is the minimal resolution.
inline FreeResolution resolve_complex(const ChainComplex& M, int B) {
  const LocalAlgebra& A = M.algebra();
  const PrimeField& F = A.field();
  const std::size_t n = A.dim();
  FreeResolution R;
  R.target = M;
  R.bound = B;
  std::vector<std::size_t> betti;  // degrees M.lo() .. B
  std::vector<Matrix> diffs;       // diffs[k] = d_{lo+k}
  std::vector<Matrix> phis;
  const int lo = M.lo();
  for (int i = lo; i <= B; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - lo);
    const std::size_t fprev = k ? betti[k - 1] * n : 0;
    const std::size_t fprev2 = k >= 2 ? betti[k - 2] * n : 0;
    const std::size_t mi = M.dim(i), mprev = M.dim(i - 1);
    const std::size_t vdim = fprev + mi;
    if (vdim == 0) {
      betti.push_back(0);
      diffs.push_back(Matrix(fprev, 0));
      phis.push_back(Matrix(mi, 0));
      continue;
    }
    // T(z, x) = (d z, phi z - d x)
    Matrix T(fprev2 + mprev, vdim);
    if (k) {
      set_block(T, 0, 0, diffs[k - 1]);
      set_block(T, fprev2, 0, phis[k - 1]);
    }
    if (mi && mprev) set_block(T, fprev2, fprev, scale(F, F.neg(1), M.d(i)));
    Subspace Z = T.rows() ? kernel(F, T) : Subspace::full(vdim);
    std::vector<AModule> parts;
    if (fprev) parts.push_back(free_module(A, betti[k - 1]));
    if (mi) parts.push_back(M.module(i));
    AModule V = direct_sum(parts);
    std::vector<Vec> small;
    for (std::size_t b = 0; b < Z.dim(); ++b) {
      Vec z = Z.vector(b);
      for (const auto& g : V.generator_actions()) small.push_back(apply(F, g, z));
    }
    Matrix up = M.d(i + 1);
    for (std::size_t c = 0; c < up.cols(); ++c) {
      Vec v(vdim, 0);
      for (std::size_t r = 0; r < mi; ++r) v[fprev + r] = up(r, c);
      small.push_back(std::move(v));
    }
    Subquotient gens(F, Z, Subspace::span(F, vdim, small));
    const std::size_t b = gens.dim();
    Matrix cover(vdim, b * n);
    for (std::size_t s = 0; s < b; ++s) {
      Vec g = gens.representative(s);
      for (std::size_t l = 0; l < n; ++l) cover.set_column(s * n + l, apply(F, V.action(l), g));
    }
    betti.push_back(b);
    diffs.push_back(block(cover, 0, fprev, 0, b * n));
    phis.push_back(block(cover, fprev, mi, 0, b * n));
  }
  // Drop the leading zero terms.
  std::size_t first = 0;
  while (first < betti.size() && betti[first] == 0) ++first;
  R.start = lo + static_cast<int>(first);
  if (first == betti.size()) {
    R.complex = ChainComplex::zero(A);
    R.start = B + 1;
    R.minimal = true;
    return R;
  }
  std::vector<AModule> mods;
  std::vector<Matrix> ds;
  for (std::size_t k = first; k < betti.size(); ++k) {
    mods.push_back(free_module(A, betti[k]));
    ds.push_back(k == first ? Matrix(0, betti[k] * n) : diffs[k]);
    R.augmentation[lo + static_cast<int>(k)] = phis[k];
  }
  R.complex = ChainComplex(A, R.start, std::move(mods), std::move(ds), false);
  R.minimal = is_minimal_free_complex(R.complex);
  return R;
}

/// Minimal free resolution of a module through degree B.
inline FreeResolution minimal_free_resolution(const AModule& M, int B) {
  if (B < 0) throw std::invalid_argument("minimal_free_resolution: bound must be >= 0");
  return resolve_complex(ChainComplex::single(M), B);
}

// ---------------------------------------------------------------------------
// Syzygy graph

struct ResidueSplit {
  std::size_t residue_summands;  // s with X = k^s + X'
  AModule rest;                  // X', which has no summand k
};

/// X = k^s + X' where s = dim (soc X + mX)/mX: a socle element outside mX
/// spans a summand k, and the submodule generated by lifts of a complement
/// of soc X in X/mX is a complement containing mX.
inline ResidueSplit split_residue_summands(const AModule& X) {
  const PrimeField& F = X.field();
  if (X.dim() == 0) return {0, X};
  const auto& gens = X.generator_actions();
  Subspace soc = gens.empty() ? Subspace::full(X.dim()) : kernel(F, vstack(gens, X.dim()));
  Subspace S = sum(F, X.radical(), soc);
  const std::size_t s = S.dim() - X.radical().dim();
  if (s == 0) return {0, X};
  Subquotient top(F, Subspace::full(X.dim()), S);
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < top.dim(); ++i) comp.push_back(top.representative(i));
  Subspace rest = generated_submodule(X, comp);
  if (rest.dim() + s != X.dim()) throw std::logic_error("split_residue_summands: complement has the wrong size");
  return {s, submodule(X, rest).module};
}

/// Omega X = Ker(A^mu -> X) as an abstract module.
inline AModule syzygy_module(const AModule& X) {
  if (X.dim() == 0) return X;
  Matrix cover = cover_matrix(X, X.minimal_generators());
  Subspace K = kernel(X.field(), cover);
  return submodule(free_module(X.algebra(), X.num_generators()), K).module;
}

/// The essential embedding X -> E(X) = D^s, s = dim soc X: functionals
/// l_t dual to a socle basis give x |-> (a |-> l_t(a x))_t.
inline ModuleMap injective_hull(const AModule& X) {
  const PrimeField& F = X.field();
  const LocalAlgebra& A = X.algebra();
  const std::size_t n = A.dim(), d = X.dim();
  const auto& gens = X.generator_actions();
  Subspace soc = d == 0 ? Subspace(0) : gens.empty() ? Subspace::full(d) : kernel(F, vstack(gens, d));
  const std::size_t s = soc.dim();
  AModule E = power(dualizing_module(A), s);
  if (s == 0) return ModuleMap(X, E, Matrix(0, d), false);
  // Lambda (s x d) with Lambda * Sigma = I, Sigma the socle basis as columns.
  auto lt = solve_many(F, soc.basis(), Matrix::identity(s));
  if (!lt) throw std::logic_error("injective_hull: socle functionals");
  Matrix Lambda = transpose(*lt);
  Matrix iota(s * n, d);
  for (std::size_t t = 0; t < s; ++t) {
    Matrix row(1, d, std::vector<Scalar>(Lambda.row(t).begin(), Lambda.row(t).end()));
    for (std::size_t l = 0; l < n; ++l) set_block(iota, t * n + l, 0, multiply(F, row, X.action(l)));
  }
  return ModuleMap(X, E, std::move(iota), false);
}

/// The cosyzygy E(X)/X.
inline AModule cosyzygy_module(const AModule& X) {
  if (X.dim() == 0) return X;
  ModuleMap i = injective_hull(X);
  return quotient(i.target(), i.image()).module;
}

namespace detail {

inline Matrix matrix_power(const PrimeField& F, Matrix m, std::size_t e) {
  Matrix r = Matrix::identity(m.rows());
  while (e) {
    if (e & 1) r = multiply(F, r, m);
    e >>= 1;
    if (e) m = multiply(F, m, m);
  }
  return r;
}

// Dimensions of m^i X, a cheap isomorphism invariant together with dim X
// and the socle dimension.
inline std::vector<std::size_t> module_invariants(const AModule& X) {
  const PrimeField& F = X.field();
  std::vector<std::size_t> inv{X.dim()};
  const auto& gens = X.generator_actions();
  inv.push_back(X.dim() == 0 || gens.empty() ? X.dim() : kernel(F, vstack(gens, X.dim())).dim());
  Subspace layer = Subspace::full(X.dim());
  while (layer.dim() > 0) {
    std::vector<Vec> next;
    for (const auto& g : gens)
      for (std::size_t i = 0; i < layer.dim(); ++i) next.push_back(apply(F, g, layer.vector(i)));
    layer = Subspace::span(F, X.dim(), next);
    inv.push_back(layer.dim());
  }
  return inv;
}

}  // namespace detail

/// Fitting splitting: if some endomorphism f has 0 < rank f^d < d (d = dim X)
/// then X = Ker f^d + Im f^d. Candidates are the basis of End(X) followed by
/// pseudo-random combinations from a fixed seed, so results are reproducible.
/// Any splitting found is a genuine direct sum decomposition; a summand on
/// which no candidate splits is kept whole, which costs time, not correctness.
inline std::optional<std::pair<AModule, AModule>> fitting_split(const AModule& X, std::size_t random_tries = 24) {
  const PrimeField& F = X.field();
  const std::size_t d = X.dim();
  if (d <= 1) return std::nullopt;
  HomSpace E(X, X);
  if (E.dim() <= 1) return std::nullopt;  // End(X) = k
  std::mt19937_64 rng(0x5eed0000u + d);
  auto attempt = [&](const Vec& c) -> std::optional<std::pair<AModule, AModule>> {
    Matrix f = E.to_matrix(c);
    Matrix g = detail::matrix_power(F, f, d);
    const std::size_t r = rank(F, g);
    if (r == 0 || r == d) return std::nullopt;
    return std::make_pair(submodule(X, kernel(F, g)).module, submodule(X, image(F, g)).module);
  };
  for (std::size_t t = 0; t < E.dim(); ++t) {
    Vec c(E.dim(), 0);
    c[t] = 1;
    if (auto s = attempt(c)) return s;
  }
  for (std::size_t t = 0; t < random_tries; ++t) {
    Vec c(E.dim());
    for (auto& x : c) x = static_cast<Scalar>(rng() % F.characteristic());
    if (auto s = attempt(c)) return s;
  }
  return std::nullopt;
}

/// An isomorphism X -> Y if one is found among the basis of Hom(X, Y) and
/// seeded random combinations. Over an indecomposable X at least half of
/// Hom(X, Y) consists of isomorphisms when X = Y, so misses are rare; a miss
/// only duplicates a class.
inline std::optional<Matrix> find_isomorphism(const AModule& X, const AModule& Y, std::size_t random_tries = 24) {
  const PrimeField& F = X.field();
  if (X.dim() != Y.dim()) return std::nullopt;
  if (X.dim() == 0) return Matrix(0, 0);
  HomSpace H(X, Y);
  std::mt19937_64 rng(0x150000u + X.dim());
  for (std::size_t t = 0; t < H.dim() + random_tries; ++t) {
    Vec c(H.dim(), 0);
    if (t < H.dim()) c[t] = 1;
    else
      for (auto& x : c) x = static_cast<Scalar>(rng() % F.characteristic());
    Matrix f = H.to_matrix(c);
    if (rank(F, f) == X.dim()) return f;
  }
  return std::nullopt;
}

/// Modules over one algebra recorded as multisets of summand classes, with
/// the syzygy of each class decomposed the same way. Class 0 is k. Two
/// classes are merged only when an explicit isomorphism is found.
class SyzygyGraph {
public:
  using Decomposition = std::vector<std::pair<std::size_t, std::size_t>>;  // (class, multiplicity)

  explicit SyzygyGraph(const LocalAlgebra& A) : alg_(A) { add_class(residue_field_module(A)); }

  const LocalAlgebra& algebra() const noexcept { return alg_; }

  Decomposition decompose(const AModule& M) {
    std::lock_guard<std::mutex> lock(mu_);
    return decompose_locked(M);
  }

  /// Decomposition of Omega of a class.
  Decomposition omega(std::size_t c) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!classes_[c].omega) {
      AModule rep = classes_[c].rep;
      Decomposition d = decompose_locked(syzygy_module(rep));
      classes_[c].omega = std::move(d);
    }
    return *classes_[c].omega;
  }

  /// Decomposition of the cosyzygy E(X)/X of a class.
  Decomposition mho(std::size_t c) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!classes_[c].mho) {
      AModule rep = classes_[c].rep;
      Decomposition d = decompose_locked(cosyzygy_module(rep));
      classes_[c].mho = std::move(d);
    }
    return *classes_[c].mho;
  }

  AModule representative(std::size_t c) {
    std::lock_guard<std::mutex> lock(mu_);
    return classes_[c].rep;
  }

  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu_);
    return classes_.size();
  }

private:
  struct Class {
    AModule rep;
    std::vector<std::size_t> invariants;
    std::optional<Decomposition> omega, mho;
  };

  std::size_t add_class(AModule X) {
    classes_.push_back({X, detail::module_invariants(X), std::nullopt, std::nullopt});
    return classes_.size() - 1;
  }

  // Hom(X, Y) is solved on num_generators(X) * dim Y unknowns; past this
  // budget a summand is kept whole and never compared, which only costs
  // duplicate classes.
  static constexpr std::size_t kSearchBudget = 480;
  static bool searchable(const AModule& X) { return X.num_generators() * X.dim() <= kSearchBudget; }

  std::size_t identify(const AModule& X) {
    if (!searchable(X)) return add_class(X);
    auto inv = detail::module_invariants(X);
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (classes_[c].invariants == inv && find_isomorphism(X, classes_[c].rep)) return c;
    return add_class(X);
  }

  Decomposition decompose_locked(const AModule& M) {
    std::map<std::size_t, std::size_t> counts;
    ResidueSplit sp = split_residue_summands(M);
    if (sp.residue_summands) counts[0] += sp.residue_summands;
    std::vector<AModule> todo;
    if (sp.rest.dim()) todo.push_back(sp.rest);
    while (!todo.empty()) {
      AModule X = std::move(todo.back());
      todo.pop_back();
      if (!searchable(X)) {
        counts[identify(X)] += 1;
        continue;
      }
      if (auto parts = fitting_split(X)) {
        todo.push_back(std::move(parts->first));
        todo.push_back(std::move(parts->second));
        continue;
      }
      counts[identify(X)] += 1;
    }
    return Decomposition(counts.begin(), counts.end());
  }

  LocalAlgebra alg_;
  std::mutex mu_;
  std::vector<Class> classes_;
};

/// Exact identity of an algebra, for cache keys.
inline std::string algebra_key(const LocalAlgebra& A) {
  std::string key;
  auto put = [&](std::uint64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(A.field().characteristic());
  put(A.dim());
  put(A.unit());
  for (Scalar c : A.structure_constants()) put(c);
  return key;
}

/// Syzygy graphs shared across computations, one per algebra (by content).
/// Entries are deterministic, so concurrent inserts of the same key are benign.
class DerivedCache {
public:
  std::shared_ptr<SyzygyGraph> graph(const LocalAlgebra& A) {
    std::string key = algebra_key(A);
    {
      std::shared_lock lock(mu_);
      auto it = graphs_.find(key);
      if (it != graphs_.end()) return it->second;
    }
    auto fresh = std::make_shared<SyzygyGraph>(A);
    std::unique_lock lock(mu_);
    auto [it, inserted] = graphs_.emplace(std::move(key), fresh);
    return it->second;
  }
  void clear() {
    std::unique_lock lock(mu_);
    graphs_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return graphs_.size();
  }

private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<SyzygyGraph>> graphs_;
};

inline DerivedCache& derived_cache() {
  static DerivedCache cache;
  return cache;
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("dimension overflows 64 bits");
  return r;
}
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension overflows 64 bits");
  return r;
}

// Values v^i(M), i in [0, B], of a sequence of functors with
//   v^1(X) = v^0(Omega X) - mu(X) dim N + v^0(X)
//   v^i(X) = v^{i-1}(Omega X)  (i >= 2)
// and additive in X. Ext^i(-, N) and Tor_i(-, N) are of this form.
template <class Level0>
std::vector<std::uint64_t> graph_values(SyzygyGraph& G, const AModule& M, int B, std::uint64_t dimN, Level0 level0) {
  if (B < 0) return {};
  const auto b = static_cast<std::size_t>(B);
  std::map<std::size_t, std::vector<std::optional<std::uint64_t>>> memo;
  std::function<std::uint64_t(std::size_t, std::size_t)> value = [&](std::size_t c, std::size_t i) -> std::uint64_t {
    auto& row = memo[c];
    if (row.empty()) row.resize(b + 1);
    if (row[i]) return *row[i];
    std::uint64_t v;
    if (i == 0) {
      v = level0(G.representative(c));
    } else {
      std::uint64_t acc = 0;
      for (auto [d, mult] : G.omega(c)) acc = checked_add(acc, checked_mul(mult, value(d, i - 1)));
      if (i == 1) {
        acc = checked_add(acc, value(c, 0));
        const std::uint64_t minus = checked_mul(G.representative(c).num_generators(), dimN);
        if (acc < minus) throw std::logic_error("graph_values: negative dimension");
        acc -= minus;
      }
      v = acc;
    }
    memo[c][i] = v;
    return v;
  };
  std::vector<std::uint64_t> out(b + 1, 0);
  for (auto [c, mult] : G.decompose(M))
    for (std::size_t i = 0; i <= b; ++i) out[i] = checked_add(out[i], checked_mul(mult, value(c, i)));
  return out;
}

inline std::size_t socle_dim(const AModule& N) {
  if (N.dim() == 0) return 0;
  const auto& g = N.generator_actions();
  return g.empty() ? N.dim() : kernel(N.field(), vstack(g, N.dim())).dim();
}

}  // namespace detail

/// Coefficients 0..B of a Betti or Bass series.
struct SeriesTruncation {
  std::vector<std::uint64_t> coefficients;
  int bound() const { return static_cast<int>(coefficients.size()) - 1; }
  std::uint64_t operator[](std::size_t i) const { return coefficients.at(i); }
  friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;
};

/// dim Ext^i_A(M, N) for i in [0, B].
inline std::vector<std::uint64_t> ext_dims(const AModule& M, const AModule& N, int B,
                                           DerivedCache& cache = derived_cache()) {
  require_same_algebra(M, N, "ext");
  auto G = cache.graph(M.algebra());
  return detail::graph_values(*G, M, B, N.dim(), [&](const AModule& X) -> std::uint64_t { return HomSpace(X, N).dim(); });
}

/// dim Tor_i^A(M, N) for i in [0, B].
inline std::vector<std::uint64_t> tor_dims(const AModule& M, const AModule& N, int B,
                                           DerivedCache& cache = derived_cache()) {
  require_same_algebra(M, N, "tor");
  auto G = cache.graph(M.algebra());
  return detail::graph_values(*G, M, B, N.dim(), [&](const AModule& X) -> std::uint64_t { return TensorSpace(X, N).dim(); });
}

inline std::uint64_t ext(const AModule& M, const AModule& N, int i, int B, DerivedCache& cache = derived_cache()) {
  if (i > B) throw BoundExceeded("ext: degree " + std::to_string(i) + " exceeds bound " + std::to_string(B));
  if (i < 0) return 0;
  return ext_dims(M, N, i, cache)[static_cast<std::size_t>(i)];
}

inline std::uint64_t tor(const AModule& M, const AModule& N, int i, int B, DerivedCache& cache = derived_cache()) {
  if (i > B) throw BoundExceeded("tor: degree " + std::to_string(i) + " exceeds bound " + std::to_string(B));
  if (i < 0) return 0;
  return tor_dims(M, N, i, cache)[static_cast<std::size_t>(i)];
}

/// Betti numbers b_0..b_B of M, i.e. dim Tor_i(M, k).
inline SeriesTruncation poincare_truncation(const AModule& M, int B, DerivedCache& cache = derived_cache()) {
  auto G = cache.graph(M.algebra());
  return {detail::graph_values(*G, M, B, 1, [](const AModule& X) -> std::uint64_t { return X.num_generators(); })};
}

/// Bass numbers mu^i(M) = dim Ext^i(k, M), i in [0, B], read off a minimal
/// injective resolution: mu^i(M) = dim soc of the i-th cosyzygy.
inline SeriesTruncation bass_truncation(const AModule& M, int B, DerivedCache& cache = derived_cache()) {
  if (B < 0) return {};
  auto G = cache.graph(M.algebra());
  const auto b = static_cast<std::size_t>(B);
  std::map<std::size_t, std::vector<std::optional<std::uint64_t>>> memo;
  std::function<std::uint64_t(std::size_t, std::size_t)> value = [&](std::size_t c, std::size_t i) -> std::uint64_t {
    auto& row = memo[c];
    if (row.empty()) row.resize(b + 1);
    if (row[i]) return *row[i];
    std::uint64_t v = 0;
    if (i == 0) {
      v = detail::socle_dim(G->representative(c));
    } else {
      for (auto [d, mult] : G->mho(c)) v = detail::checked_add(v, detail::checked_mul(mult, value(d, i - 1)));
    }
    memo[c][i] = v;
    return v;
  };
  std::vector<std::uint64_t> out(b + 1, 0);
  for (auto [c, mult] : G->decompose(M))
    for (std::size_t i = 0; i <= b; ++i) out[i] = detail::checked_add(out[i], detail::checked_mul(mult, value(c, i)));
  return {out};
}

// ---------------------------------------------------------------------------
// Ext and Tor of complexes through explicit resolutions

/// dim H_{-i} Hom(F, N) with F a semiprojective resolution of M.
inline std::size_t ext(const ChainComplex& M, const AModule& N, int i, int B) {
  if (i > B) throw BoundExceeded("ext: degree " + std::to_string(i) + " exceeds bound " + std::to_string(B));
  FreeResolution R = resolve_complex(M, i + 1);
  return homology_dim(hom_complex(R.complex, ChainComplex::single(N)), -i);
}

/// dim H_i(F (x) M) with F a semiprojective resolution of L.
inline std::size_t tor(const ChainComplex& L, const ChainComplex& M, int i, int B) {
  if (i > B) throw BoundExceeded("tor: degree " + std::to_string(i) + " exceeds bound " + std::to_string(B));
  const int lo = M.empty_window() ? 0 : M.lo();
  FreeResolution R = resolve_complex(L, i + 1 - lo);
  return homology_dim(tensor_complex(R.complex, M), i);
}

/// The largest i with H_i(M) != 0, if any.
inline std::optional<int> sup_homology(const ChainComplex& M) {
  for (int i = M.hi(); i >= M.lo(); --i)
    if (homology_dim(M, i)) return i;
  return std::nullopt;
}

inline std::optional<int> inf_homology(const ChainComplex& M) {
  for (int i = M.lo(); i <= M.hi(); ++i)
    if (homology_dim(M, i)) return i;
  return std::nullopt;
}

}  // namespace gorext
