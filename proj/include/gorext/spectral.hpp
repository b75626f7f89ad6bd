// The spectral sequence of Hom(G, J) filtered by the subcomplexes J_{<=p},
// for J a bounded complex of injective modules.
#pragma once

#include <map>
#include <utility>

#include "gorext/resolution.hpp"

namespace gorext {

class NotInjective : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Over an artinian local ring every injective is D^s, and a module X embeds
/// in its hull D^{dim soc X}; so X is injective iff dim X = dim soc X * dim A.
/// Returns s with X = D^s, or nullopt.
inline std::optional<std::size_t> injective_copies(const AModule& X) {
  const std::size_t s = detail::socle_dim(X);
  if (X.dim() != s * X.algebra().dim()) return std::nullopt;
  return s;
}

/// Copies of D in each degree of J; throws NotInjective naming the first
/// degree that fails.
inline std::map<int, std::size_t> certify_injective(const ChainComplex& J) {
  std::map<int, std::size_t> out;
  for (int i = J.lo(); i <= J.hi(); ++i) {
    auto s = injective_copies(J.module(i));
    if (!s) throw NotInjective("J_" + std::to_string(i) + " is not a sum of copies of D");
    out[i] = *s;
  }
  return out;
}

using Bidegree = std::pair<int, int>;  // (p, q)

struct SpectralPage {
  int r = 0;
  std::map<Bidegree, std::size_t> dims;
  std::map<Bidegree, Matrix> differential;  // D^r_{pq}: E^r_{pq} -> E^r_{p-r,q+r-1}
};

struct SpectralSequencePages {
  int p_lo = 0, p_hi = 0, n_lo = 0, n_hi = -1;
  std::vector<SpectralPage> pages;         // r = 0 .. pages.size()-1
  std::map<Bidegree, std::size_t> graded;  // dim F_p H_n / F_{p-1} H_n at (p, n-p)
  std::map<int, std::size_t> homology;     // dim H_n Hom(G, J)
  bool pages_are_homology = true;          // dim E^{r+1} = dim H(E^r, D^r) everywhere
  int stable_from = -1;                    // first r from which E^r = E^infinity with D^r = 0

  std::size_t dim(int r, int p, int q) const {
    const auto& d = pages.at(static_cast<std::size_t>(r)).dims;
    auto it = d.find({p, q});
    return it == d.end() ? 0 : it->second;
  }
  std::size_t infinity(int p, int q) const {
    auto it = graded.find({p, q});
    return it == graded.end() ? 0 : it->second;
  }
  /// Strong convergence in the window: the last page is the associated
  /// graded of H Hom(G, J), and the graded pieces add up to H_n.
  bool converges() const {
    if (stable_from < 0) return false;
    for (int n = n_lo; n <= n_hi; ++n) {
      std::size_t total = 0;
      for (int p = p_lo; p <= p_hi; ++p) total += infinity(p, n - p);
      if (total != homology.at(n)) return false;
    }
    return true;
  }
};

namespace detail {

class FilteredHom {
public:
  FilteredHom(const ChainComplex& G, const ChainComplex& J) : H_(G, J), C_(H_.complex()) {}

  const HomComplex& hom() const { return H_; }
  const ChainComplex& complex() const { return C_; }
  const PrimeField& field() const { return C_.field(); }

  /// Coordinates of C_n lying in F_p, i.e. in pieces Hom(G_i, J_j) with j <= p.
  std::vector<std::size_t> coords(int n, int p) const {
    std::vector<std::size_t> out;
    if (n < H_.lo() || n > H_.hi()) return out;
    for (const auto& piece : H_.degree(n).pieces)
      if (piece.j <= p)
        for (std::size_t t = 0; t < piece.hom.dim(); ++t) out.push_back(piece.offset + t);
    return out;
  }

  Subspace filtration(int n, int p) const {
    const std::size_t d = C_.dim(n);
    std::vector<Vec> vs;
    for (auto c : coords(n, p)) {
      Vec v(d, 0);
      v[c] = 1;
      vs.push_back(std::move(v));
    }
    return Subspace::span(field(), d, vs);
  }

  /// Z^r_p in degree n: x in F_p C_n with d x in F_{p-r} C_{n-1}.
  Subspace Z(int r, int p, int n) const {
    const PrimeField& F = field();
    const std::size_t d = C_.dim(n);
    std::vector<std::size_t> cols = coords(n, p);
    if (cols.empty()) return Subspace(d);
    std::vector<std::size_t> inside = coords(n - 1, p - r);
    std::vector<bool> keep(C_.dim(n - 1), true);
    for (auto c : inside) keep[c] = false;
    Matrix D = C_.d(n);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i]) rows.push_back(i);
    Matrix sub(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = D(rows[a], cols[b]);
    Subspace K = rows.empty() ? Subspace::full(cols.size()) : kernel(F, sub);
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < K.dim(); ++i) {
      Vec k = K.vector(i), v(d, 0);
      for (std::size_t b = 0; b < cols.size(); ++b) v[cols[b]] = k[b];
      vs.push_back(std::move(v));
    }
    return Subspace::span(F, d, vs);
  }

  /// E^r_p in degree n = Z^r_p / (Z^{r-1}_{p-1} + d Z^{r-1}_{p+r-1}).
  Subquotient E(int r, int p, int n) const {
    const PrimeField& F = field();
    Subspace top = Z(r, p, n);
    Subspace low = Z(r - 1, p - 1, n);
    Subspace bd = map_subspace(F, C_.d(n + 1), Z(r - 1, p + r - 1, n + 1));
    return Subquotient(F, top, sum(F, low, bd));
  }

private:
  HomComplex H_;
  ChainComplex C_;
};

}  // namespace detail

/// All pages E^r, r = 0 .. (filtration length + 2), of the spectral sequence
/// of the filtration F_p Hom(G, J) = Hom(G, J_{<=p}); cells are indexed by
/// (p, q) with total degree n = p + q. The graded pieces of H Hom(G, J) are
/// computed directly from the filtration, independently of the pages.
inline SpectralSequencePages spectral_sequence(const ChainComplex& G, const ChainComplex& J) {
  certify_injective(J);
  auto supp = J.support();
  if (supp && supp->second > 0) throw std::invalid_argument("spectral_sequence: J must have sup J <= 0");
  const PrimeField& F = G.field();
  detail::FilteredHom FH(G, J);
  const ChainComplex& C = FH.complex();
  SpectralSequencePages S;
  S.p_lo = J.lo();
  S.p_hi = J.hi();
  S.n_lo = FH.hom().lo();
  S.n_hi = FH.hom().hi();
  const int R = (S.p_hi - S.p_lo) + 2;

  for (int r = 0; r <= R; ++r) {
    SpectralPage page;
    page.r = r;
    std::map<Bidegree, Subquotient> g;
    for (int n = S.n_lo; n <= S.n_hi; ++n)
      for (int p = S.p_lo; p <= S.p_hi; ++p) {
        Subquotient e = FH.E(r, p, n);
        page.dims[{p, n - p}] = e.dim();
        g.emplace(Bidegree{p, n - p}, std::move(e));
      }
    for (const auto& [pq, e] : g) {
      const auto [p, q] = pq;
      const Bidegree tgt{p - r, q + r - 1};
      auto it = g.find(tgt);
      const std::size_t rows = it == g.end() ? 0 : it->second.dim();
      Matrix D(rows, e.dim());
      if (rows)
        for (std::size_t c = 0; c < e.dim(); ++c)
          D.set_column(c, it->second.coordinates(F, apply(F, C.d(p + q), e.representative(c))));
      page.differential.emplace(pq, std::move(D));
    }
    S.pages.push_back(std::move(page));
  }

  for (std::size_t r = 0; r + 1 < S.pages.size(); ++r) {
    const auto& page = S.pages[r];
    const int rr = static_cast<int>(r);
    for (const auto& [pq, dim] : page.dims) {
      const auto [p, q] = pq;
      const Matrix& out = page.differential.at(pq);
      const std::size_t ker = dim - rank(F, out);
      auto in = page.differential.find({p + rr, q - rr + 1});
      const std::size_t im = in == page.differential.end() ? 0 : rank(F, in->second);
      if (S.pages[r + 1].dims.at(pq) != ker - im) S.pages_are_homology = false;
    }
  }

  for (int n = S.n_lo; n <= S.n_hi; ++n) {
    Subspace Zn = C.dim(n) ? kernel(F, C.d(n)) : Subspace(0);
    Subspace Bn = map_subspace(F, C.d(n + 1), Subspace::full(C.dim(n + 1)));
    S.homology[n] = Zn.dim() - Bn.dim();
    std::size_t prev = 0;
    for (int p = S.p_lo; p <= S.p_hi; ++p) {
      const std::size_t fp = sum(F, intersect(F, Zn, FH.filtration(n, p)), Bn).dim() - Bn.dim();
      S.graded[{p, n - p}] = fp - prev;
      prev = fp;
    }
  }

  // Stable from r when every later page has zero differentials and equals
  // the associated graded.
  S.stable_from = -1;
  for (int r = R; r >= 0; --r) {
    const auto& page = S.pages[static_cast<std::size_t>(r)];
    bool ok = true;
    for (const auto& [pq, dim] : page.dims)
      if (dim != S.infinity(pq.first, pq.second) || !page.differential.at(pq).is_zero()) ok = false;
    if (!ok) break;
    S.stable_from = r;
  }
  return S;
}

/// dim H_p Hom(H_{-q}(G), J) for every cell: the closed form of E^2.
inline std::map<Bidegree, std::size_t> e2_formula(const ChainComplex& G, const ChainComplex& J) {
  std::map<Bidegree, std::size_t> out;
  for (int q = -G.hi(); q <= -G.lo(); ++q) {
    HomologyModule h = homology_module(G, -q);
    ChainComplex Hq = hom_complex(ChainComplex::single(h.module), J);
    for (int p = J.lo(); p <= J.hi(); ++p) out[{p, q}] = homology_dim(Hq, p);
  }
  return out;
}

}  // namespace gorext
