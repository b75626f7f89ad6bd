// Ring-level verdicts: Gorenstein, Golod, hypersurface, complete
// intersection, the two Tachikawa-style checks and the m^3 = 0 diagnostic.
#pragma once

#include <string>

#include "gorext/resolution.hpp"
#include "gorext/series.hpp"

namespace gorext {

class NotSelfinjective : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class LoewyTooLarge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact verdicts hold outright; bounded ones were only checked through
/// degree `bound`.
enum class VerdictKind { exact, bounded };

struct Verdict {
  std::string property;
  bool value = false;
  VerdictKind kind = VerdictKind::exact;
  int bound = -1;           // for bounded verdicts
  std::string certificate;  // witness or failed step

  std::string tag() const { return kind == VerdictKind::exact ? "exact" : "verified-to-" + std::to_string(bound); }
};

// ---------------------------------------------------------------------------
// Gorenstein

/// dim soc A = 1, cross-checked against D being free of rank one.
inline Verdict gorenstein(const LocalAlgebra& A) {
  const std::size_t s = socle(A).dim();
  const bool by_socle = s == 1;
  const bool by_dual = is_free_rank_one(dualizing_module(A)).value;
  if (by_socle != by_dual) throw std::logic_error("gorenstein: socle and dualizing-module criteria disagree");
  return {"gorenstein", by_socle, VerdictKind::exact, -1, "socle dimension " + std::to_string(s)};
}

// ---------------------------------------------------------------------------
// Koszul homology and the Serre bound

/// rank H_j(K) for j = 1 .. edim.
inline std::vector<std::uint64_t> koszul_homology_ranks(const LocalAlgebra& A) {
  ChainComplex K = koszul_complex(A);
  std::vector<std::uint64_t> out;
  for (int j = 1; j <= static_cast<int>(edim(A)); ++j) out.push_back(homology_dim(K, j));
  return out;
}

inline RationalSeries serre_bound(const LocalAlgebra& A) {
  return serre_denominator(koszul_homology_ranks(A), static_cast<int>(edim(A)));
}

struct SerreComparison {
  std::vector<std::uint64_t> betti;  // of k, degrees 0..B
  std::vector<BigInt> bound;         // Serre series, degrees 0..B
  bool inequality_holds = true;      // betti <= bound coefficientwise
  std::optional<int> first_strict;   // first degree with betti < bound
};

inline SerreComparison serre_comparison(const LocalAlgebra& A, int B) {
  SerreComparison c;
  c.betti = poincare_truncation(residue_field_module(A), B).coefficients;
  c.bound = series_coefficients(serre_bound(A), B);
  for (int i = 0; i <= B; ++i) {
    const BigInt b(c.betti[static_cast<std::size_t>(i)]);
    const BigInt& s = c.bound[static_cast<std::size_t>(i)];
    if (b > s) c.inequality_holds = false;
    if (b < s && !c.first_strict) c.first_strict = i;
  }
  return c;
}

/// Golod through degree B: the Poincare series of k equals the Serre bound.
inline Verdict golod(const LocalAlgebra& A, int B) {
  if (B < 2) throw std::invalid_argument("golod: bound must be >= 2");
  SerreComparison c = serre_comparison(A, B);
  if (!c.inequality_holds) throw std::logic_error("golod: Betti numbers exceed the Serre bound");
  Verdict v{"golod", !c.first_strict.has_value(), VerdictKind::bounded, B, ""};
  v.certificate = c.first_strict ? "strict inequality in degree " + std::to_string(*c.first_strict) : "equality through degree " + std::to_string(B);
  return v;
}

// ---------------------------------------------------------------------------
// Hypersurface and complete intersection

/// Bounded check: P_k(t) = (1 + t)^e / (1 - t^2) through degree B. An
/// artinian ring is a hypersurface exactly when edim <= 1, which is attached
/// as an exact certificate when it applies.
inline Verdict hypersurface(const LocalAlgebra& A, int B) {
  const std::size_t e = edim(A);
  if (e <= 1) return {"hypersurface", true, VerdictKind::exact, -1, "principal: edim " + std::to_string(e)};
  auto betti = poincare_truncation(residue_field_module(A), B).coefficients;
  auto model = series_coefficients({IntegerPolynomial{1, 1}.pow(static_cast<unsigned>(e)), {1, 0, -1}}, B);
  for (int i = 0; i <= B; ++i)
    if (BigInt(betti[static_cast<std::size_t>(i)]) != model[static_cast<std::size_t>(i)])
      return {"hypersurface", false, VerdictKind::bounded, B, "Betti number of k differs in degree " + std::to_string(i)};
  return {"hypersurface", true, VerdictKind::bounded, B, "matches (1+t)^e/(1-t^2)"};
}

/// Two paths: the series P_k(t) = (1 + t)^e / (1 - t^2)^e through B, and the
/// exact count of minimal relations b_2(k) - C(e, 2), which equals e exactly
/// for complete intersections. The certificate names the deciding path.
inline Verdict complete_intersection(const LocalAlgebra& A, int B) {
  const std::size_t e = edim(A);
  const int need = std::max(B, 2);
  auto betti = poincare_truncation(residue_field_module(A), need).coefficients;
  const std::uint64_t relations = betti[2] - e * (e - 1) / 2;
  const bool exact_value = relations == e;
  auto model = series_coefficients({IntegerPolynomial{1, 1}.pow(static_cast<unsigned>(e)),
                                    IntegerPolynomial{1, 0, -1}.pow(static_cast<unsigned>(e))},
                                   need);
  bool series_value = true;
  for (int i = 0; i <= need; ++i)
    if (BigInt(betti[static_cast<std::size_t>(i)]) != model[static_cast<std::size_t>(i)]) series_value = false;
  if (series_value != exact_value) throw std::logic_error("complete_intersection: series and relation count disagree");
  return {"complete_intersection", exact_value, VerdictKind::exact, -1,
          "presentation: " + std::to_string(relations) + " minimal relations, edim " + std::to_string(e) +
              "; series agrees through degree " + std::to_string(need)};
}

// ---------------------------------------------------------------------------
// Tachikawa-style checks

enum class TcOutcome { consistent, counterexample_candidate };

inline std::string to_string(TcOutcome o) {
  return o == TcOutcome::consistent ? "CONSISTENT" : "COUNTEREXAMPLE-CANDIDATE";
}

struct Tc1Result {
  int bound = 0;
  std::vector<std::uint64_t> ext;    // dim Ext^i(D, A), i = 1..bound
  std::optional<int> first_nonzero;  // least i with Ext^i(D, A) != 0
  bool gorenstein = false;
  TcOutcome outcome = TcOutcome::consistent;
};

/// Ext^i(D, A) for i in [1, B]; a ring with the whole window zero that is
/// not Gorenstein is flagged, never declared a counterexample.
inline Tc1Result tc1_check(const LocalAlgebra& A, int B) {
  if (B < 1) throw std::invalid_argument("tc1_check: bound must be >= 1");
  Tc1Result r;
  r.bound = B;
  auto e = ext_dims(dualizing_module(A), regular_module(A), B);
  r.ext.assign(e.begin() + 1, e.end());
  for (int i = 1; i <= B; ++i)
    if (e[static_cast<std::size_t>(i)] && !r.first_nonzero) r.first_nonzero = i;
  r.gorenstein = gorenstein(A).value;
  if (!r.first_nonzero && !r.gorenstein) r.outcome = TcOutcome::counterexample_candidate;
  return r;
}

struct Tc2Result {
  int bound = 0;
  std::vector<std::uint64_t> ext;  // dim Ext^i(M, M), i = 1..bound
  std::optional<int> first_nonzero;
  bool projective = false;
  TcOutcome outcome = TcOutcome::consistent;
};

/// Over a selfinjective A: Ext^{1..B}(M, M) = 0 should force M free.
inline Tc2Result tc2_check(const LocalAlgebra& A, const AModule& M, int B) {
  if (B < 1) throw std::invalid_argument("tc2_check: bound must be >= 1");
  if (!gorenstein(A).value) throw NotSelfinjective("tc2_check: the algebra is not selfinjective");
  Tc2Result r;
  r.bound = B;
  auto e = ext_dims(M, M, B);
  r.ext.assign(e.begin() + 1, e.end());
  for (int i = 1; i <= B; ++i)
    if (e[static_cast<std::size_t>(i)] && !r.first_nonzero) r.first_nonzero = i;
  r.projective = M.dim() == M.num_generators() * A.dim();  // free iff A^mu -> M is injective
  if (!r.first_nonzero && !r.projective) r.outcome = TcOutcome::counterexample_candidate;
  return r;
}

// ---------------------------------------------------------------------------
// The m^3 = 0 diagnostic

/// One link a (rel) b of the length chain; rel is "=" or ">=".
struct ChainLink {
  std::string left, rel, right;
  long long left_value = 0, right_value = 0;
  bool holds() const { return rel == "=" ? left_value == right_value : left_value >= right_value; }
};

struct Loewy3Report {
  std::size_t length = 0, edim = 0, len_m2 = 0, socle_dim = 0;
  bool m2_equals_socle = false;
  std::uint64_t ext1_DA = 0;
  bool gorenstein = false;
  // free cover 0 -> C -> F -> D -> 0
  std::size_t cover_rank = 0, dim_C = 0, mu_C = 0, mu_D = 0;
  bool mC_zero = false;
  std::size_t tor1_DD = 0, dim_C_tensor_D = 0, dim_hom_DD = 0;
  // dimension shifting along the cover
  std::uint64_t ext2_C_A = 0, ext1_C_A = 0, ext2_D_A = 0, ext2_k_A = 0;
  // the length chain, evaluated when l(m^2) = 2
  std::optional<std::size_t> chain_element;  // basis index of x in m \ (0 : m)
  std::vector<ChainLink> chain;
  std::string branch;

  std::vector<std::string> failed_links() const {
    std::vector<std::string> out;
    for (const auto& c : chain)
      if (!c.holds()) out.push_back(c.left + " " + c.rel + " " + c.right);
    return out;
  }
};

/// l((0 : x)_M) and l(M / xM) for x in A, each computed on its own
/// (kernel basis, quotient module) rather than by rank-nullity.
struct ColonLengths {
  std::size_t colon = 0, cokernel = 0;
};

inline ColonLengths colon_lengths(const AModule& M, const Vec& x) {
  return {colon_in_module(M, x).dim(), quotient(M, image(M.field(), M.act(x))).module.dim()};
}

inline Loewy3Report loewy3_diagnostic(const LocalAlgebra& A) {
  if (A.loewy_length() > 3) throw LoewyTooLarge("loewy3_diagnostic: m^3 != 0");
  const PrimeField& F = A.field();
  Loewy3Report r;
  r.length = A.dim();
  r.edim = edim(A);
  const auto& pw = A.max_powers();
  r.len_m2 = pw.size() > 2 ? pw[2].dim() : 0;
  Subspace soc = socle(A);
  r.socle_dim = soc.dim();
  const Subspace m2 = pw.size() > 2 ? pw[2] : Subspace(A.dim());
  r.m2_equals_socle = m2.dim() == soc.dim() && sum(F, m2, soc).dim() == soc.dim();
  r.gorenstein = gorenstein(A).value;

  const AModule D = dualizing_module(A), R = regular_module(A), k = residue_field_module(A);
  auto extDA = ext_dims(D, R, 2);
  r.ext1_DA = extDA[1];
  r.ext2_D_A = extDA[2];
  r.ext2_k_A = ext(k, R, 2, 2);

  ModuleMap cover = projective_cover(D);
  r.cover_rank = cover.source().dim() / A.dim();
  Submodule C = submodule(cover.source(), kernel(F, cover.matrix()));
  r.dim_C = C.module.dim();
  r.mu_C = C.module.num_generators();
  r.mu_D = D.num_generators();
  r.mC_zero = C.module.radical().dim() == 0;
  if (r.dim_C) {
    auto extC = ext_dims(C.module, R, 2);
    r.ext1_C_A = extC[1];
    r.ext2_C_A = extC[2];
  }
  r.tor1_DD = tor(D, D, 1, 1);
  r.dim_C_tensor_D = r.dim_C ? tensor_module(C.module, D).dim() : 0;
  r.dim_hom_DD = hom_module(D, D).dim();

  if (r.len_m2 == 0) r.branch = "m^2 = 0";
  else if (r.len_m2 == 1) r.branch = "l(m^2) = 1";
  else if (r.len_m2 == 2) r.branch = "l(m^2) = 2";
  else r.branch = "l(m^2) > 2";

  if (r.len_m2 == 2 && r.dim_C) {
    // x in m outside the socle
    for (auto j : A.maxideal())
      if (!soc.contains(F, A.basis_vector(j))) {
        r.chain_element = j;
        break;
      }
    if (r.chain_element) {
      const Vec x = A.basis_vector(*r.chain_element);
      const AModule CD = tensor_module(C.module, D);
      const long long lR = static_cast<long long>(A.dim());
      const long long lRx = static_cast<long long>(rank(F, A.mult_matrix(x)));
      const long long colonR = static_cast<long long>(colon_lengths(R, x).colon);
      ColonLengths cd = colon_lengths(CD, x);
      const long long topCD = static_cast<long long>(CD.num_generators());
      const long long e = static_cast<long long>(r.edim);
      const long long muC = static_cast<long long>(r.mu_C), muD = static_cast<long long>(r.mu_D);
      r.chain = {
          {"1 + l(m/m^2)", "=", "l(R) - 2", 1 + e, lR - 2},
          {"l(R) - 2", ">=", "l(R) - l(Rx)", lR - 2, lR - lRx},
          {"l(R) - l(Rx)", "=", "l((0:x)_R)", lR - lRx, colonR},
          {"l((0:x)_R)", ">=", "l((0:x)_{C(x)D})", colonR, static_cast<long long>(cd.colon)},
          {"l((0:x)_{C(x)D})", "=", "l(C(x)D / x C(x)D)", static_cast<long long>(cd.colon), static_cast<long long>(cd.cokernel)},
          {"l(C(x)D / x C(x)D)", ">=", "l(C(x)D / m C(x)D)", static_cast<long long>(cd.cokernel), topCD},
          {"l(C(x)D / m C(x)D)", "=", "l(C/mC) l(D/mD)", topCD, muC * muD},
          {"l(C/mC) l(D/mD)", "=", "2 l(m/m^2)", muC * muD, 2 * e},
      };
    }
  }
  return r;
}

}  // namespace gorext
