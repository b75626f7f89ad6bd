// Evaluation maps E (x) J -> Hom(Hom(E, A), J) and the comparison
// E (x) J -> Hom(N*, J) for a free resolution E of N.
#pragma once

#include "gorext/spectral.hpp"

namespace gorext {

class HypothesisFailed : public std::runtime_error {
public:
  HypothesisFailed(const std::string& what, int degree) : std::runtime_error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

private:
  int degree_;
};

/// Sign s in theta(x (x) y)(gamma) = s gamma(x) y, for x in E_h, y in J_i and
/// gamma in Hom(E_h, A), which sits in degree -h.
enum class EvaluationSign {
  gamma_y,         // (-1)^{|gamma||y|} = (-1)^{hi}
  total_y,         // (-1)^{(h+i)i}
  gamma_y_plus_1,  // (-1)^{|gamma|(|y|+1)} = (-1)^{h(i+1)}; commutes with the differentials
};

inline long long evaluation_sign_exponent(EvaluationSign s, int h, int i) {
  switch (s) {
    case EvaluationSign::gamma_y: return static_cast<long long>(h) * i;
    case EvaluationSign::total_y: return static_cast<long long>(h + i) * i;
    case EvaluationSign::gamma_y_plus_1: return static_cast<long long>(h) * (i + 1);
  }
  return 0;
}

struct EvaluationMap {
  ChainComplex dual;  // Hom(E, A)
  ComplexMap map;     // E (x) J -> Hom(Hom(E, A), J)
};

/// theta for a bounded complex E of free modules and any bounded J. The map
/// is built without checking; call map.validate() (or chain_map_defect) to
/// see whether the chosen sign makes it a morphism of complexes.
inline EvaluationMap evaluation_map(const ChainComplex& E, const ChainComplex& J,
                                    EvaluationSign sign_policy = EvaluationSign::gamma_y_plus_1) {
  const LocalAlgebra& A = E.algebra();
  const PrimeField& F = A.field();
  HomComplex GH(E, ChainComplex::single(regular_module(A)));
  const ChainComplex& G = GH.complex();
  TensorComplex T(E, J);
  HomComplex H(G, J);

  // gamma_t as matrices E_h -> A, for each h
  std::map<int, std::vector<Matrix>> gammas;
  for (int h = E.lo(); h <= E.hi(); ++h)
    for (const auto& p : GH.degree(-h).pieces)
      for (std::size_t t = 0; t < p.hom.dim(); ++t) gammas[h].push_back(p.hom.basis_matrix(t));

  std::map<int, Matrix> comps;
  for (int n = T.lo(); n <= T.hi(); ++n) {
    const std::size_t rows = H.lo() <= n && n <= H.hi() ? H.degree(n).dim : 0;
    Matrix theta(rows, T.degree(n).dim);
    for (const auto& piece : T.degree(n).pieces) {
      const int h = piece.h, i = piece.i;
      const AModule Eh = E.module(h), Ji = J.module(i);
      const Scalar s = sign(F, evaluation_sign_exponent(sign_policy, h, i));
      const auto& gs = gammas[h];
      Matrix values(rows, Eh.dim() * Ji.dim());
      for (std::size_t a = 0; a < Eh.dim(); ++a)
        for (std::size_t b = 0; b < Ji.dim(); ++b) {
          Matrix beta(Ji.dim(), gs.size());
          for (std::size_t t = 0; t < gs.size(); ++t) {
            Vec ga = gs[t].column(a);
            Vec v = Ji.act(ga).column(b);
            for (std::size_t r = 0; r < v.size(); ++r) beta(r, t) = F.mul(s, v[r]);
          }
          values.set_column(a * Ji.dim() + b, H.from_components(n, {{-h, beta}}));
        }
      if (piece.tensor.dim()) set_block(theta, 0, piece.offset, induced_on_tensor(F, piece.tensor, values));
    }
    comps[n] = std::move(theta);
  }
  return {G, ComplexMap(T.complex(), H.complex(), std::move(comps), false)};
}

/// First degree where a map of complexes fails to commute with the
/// differentials, or nullopt.
inline std::optional<int> chain_map_defect(const ComplexMap& a) {
  const PrimeField& F = a.source().field();
  const int lo = std::min(a.source().lo(), a.target().lo()), hi = std::max(a.source().hi(), a.target().hi());
  for (int i = lo; i <= hi + 1; ++i)
    if (!(multiply(F, a.target().d(i), a.at(i)) == multiply(F, a.at(i - 1), a.source().d(i)))) return i;
  return std::nullopt;
}

struct DegreeVerdict {
  int degree;
  std::size_t source_dim, target_dim, rank;
  bool iso() const { return source_dim == target_dim && rank == source_dim; }
};

struct VarthetaComparison {
  FreeResolution resolution;   // of N through degree m + 1
  ComplexMap map;              // E (x) J -> Hom(N*, J)
  std::vector<DegreeVerdict> degrees;  // from inf(E (x) J) to m + inf J
  bool all_iso() const {
    for (const auto& d : degrees)
      if (!d.iso()) return false;
    return true;
  }
};

namespace detail {

/// Hom(eps, A): N* -> Hom(E_0, A), as a matrix in the coordinates of the
/// HomSpaces involved.
inline Matrix dual_augmentation(const HomSpace& Nstar, const HomSpace& G0, const Matrix& eps0) {
  const PrimeField& F = Nstar.source().field();
  Matrix R(G0.dim(), Nstar.dim());
  for (std::size_t t = 0; t < Nstar.dim(); ++t) R.set_column(t, G0.from_matrix(multiply(F, Nstar.basis_matrix(t), eps0)));
  return R;
}

}  // namespace detail

/// vartheta = Hom(Hom(eps, A), J) o theta for the minimal resolution E -> N.
/// Requires Ext^i(N, A) = 0 for 1 <= i <= m (checked on the explicit
/// resolution; HypothesisFailed carries the first failing i) and J a bounded
/// complex of injectives (NotInjective). Reports H_i(vartheta) for every i up
/// to m + inf J.
inline VarthetaComparison vartheta_comparison(const AModule& N, const ChainComplex& J, int m) {
  if (m < 0) throw std::invalid_argument("vartheta_comparison: m must be >= 0");
  certify_injective(J);
  const LocalAlgebra& A = N.algebra();
  const PrimeField& F = A.field();
  FreeResolution R = minimal_free_resolution(N, m + 1);
  ChainComplex E = R.start == 0 ? R.complex : ChainComplex::zero(A);
  HomComplex GH(E, ChainComplex::single(regular_module(A)));
  for (int i = 1; i <= m; ++i)
    if (homology_dim(GH.complex(), -i))
      throw HypothesisFailed("Ext^" + std::to_string(i) + "(N, A) != 0", i);

  EvaluationMap theta = evaluation_map(E, J);
  HomComplex Hth(theta.dual, J);
  HomSpace Nstar_space(N, regular_module(A));
  const AModule Nstar = Nstar_space.module();
  HomComplex Hn(ChainComplex::single(Nstar), J);

  Matrix R0;
  if (E.in_window(0)) {
    const HomSpace& G0 = GH.degree(0).pieces.front().hom;
    R0 = detail::dual_augmentation(Nstar_space, G0, R.augmentation.at(0));
  }

  std::map<int, Matrix> comps;
  const ChainComplex& src = theta.map.source();
  for (int n = src.lo(); n <= src.hi(); ++n) {
    const std::size_t tdim = Hn.lo() <= n && n <= Hn.hi() ? Hn.degree(n).dim : 0;
    const std::size_t mid = Hth.lo() <= n && n <= Hth.hi() ? Hth.degree(n).dim : 0;
    Matrix restrict(tdim, mid);
    if (tdim && R0.rows())
      for (std::size_t c = 0; c < mid; ++c) {
        Vec x(mid, 0);
        x[c] = 1;
        Matrix b0 = Hth.component(n, x, 0);  // Hom(E_0, A) -> J_n
        restrict.set_column(c, Hn.from_components(n, {{0, multiply(F, b0, R0)}}));
      }
    comps[n] = multiply(F, restrict, theta.map.at(n));
  }
  VarthetaComparison out{R, ComplexMap(src, Hn.complex(), std::move(comps), false), {}};
  auto supp = J.support();
  const int jlo = supp ? supp->first : 0;
  for (int i = src.lo(); i <= m + jlo; ++i) {
    Matrix h = homology_map(out.map, i);
    out.degrees.push_back({i, h.cols(), h.rows(), rank(F, h)});
  }
  return out;
}

/// Consequences of Ext^i(L, A) = 0 for 1 <= i <= m when M has finite
/// injective dimension. Over an artinian ring such an M is injective, so the
/// injective dimension n is 0: then Ext^i(L*, M) = 0 for i >= 1,
/// Tor_i(L, M) = 0 for 1 <= i <= m, and L (x) M = Hom(L*, M).
struct InjectiveModuleCheck {
  int m = 0, bound = 0;
  std::vector<std::uint64_t> ext_dual;  // dim Ext^i(L*, M), i = 0..bound
  std::vector<std::uint64_t> tor;       // dim Tor_i(L, M), i = 0..m
  std::size_t tensor_dim = 0, hom_dual_dim = 0;
  bool degree_zero_iso = false;  // vartheta in degree 0

  bool ext_vanishes() const {
    for (std::size_t i = 1; i < ext_dual.size(); ++i)
      if (ext_dual[i]) return false;
    return true;
  }
  bool tor_vanishes() const {
    for (std::size_t i = 1; i < tor.size(); ++i)
      if (tor[i]) return false;
    return true;
  }
  bool holds() const { return ext_vanishes() && tor_vanishes() && tensor_dim == hom_dual_dim && degree_zero_iso; }
};

inline InjectiveModuleCheck injective_module_check(const AModule& L, const AModule& M, int m, int B) {
  if (!injective_copies(M)) throw NotInjective("injective_module_check: M has no finite injective dimension");
  const LocalAlgebra& A = L.algebra();
  const AModule Areg = regular_module(A);
  for (int i = 1; i <= m; ++i)
    if (ext(L, Areg, i, std::max(B, m)))
      throw HypothesisFailed("Ext^" + std::to_string(i) + "(L, A) != 0", i);
  InjectiveModuleCheck out;
  out.m = m;
  out.bound = B;
  const AModule Lstar = hom_module(L, Areg);
  out.ext_dual = ext_dims(Lstar, M, B);
  out.tor = tor_dims(L, M, m);
  out.tensor_dim = tensor_module(L, M).dim();
  out.hom_dual_dim = hom_module(Lstar, M).dim();
  VarthetaComparison v = vartheta_comparison(L, ChainComplex::single(M), m);
  for (const auto& d : v.degrees)
    if (d.degree == 0) out.degree_zero_iso = d.iso();
  return out;
}

/// Tor_i(L, M) against Tor_{i-l-m}(L', M') for complexes of free modules,
/// with l = sup H(L), m = sup H(M), i > l + m, and L' = Coker d^E_{l+1},
/// M' likewise, E a semiprojective resolution.
struct DegreeShiftCheck {
  int i = 0, l = 0, m = 0;
  std::size_t lhs = 0;
  std::uint64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

namespace detail {

inline AModule top_cokernel(const ChainComplex& X, int s) {
  FreeResolution R = resolve_complex(X, s + 1);
  const PrimeField& F = X.field();
  const AModule Es = R.complex.module(s);
  return quotient(Es, image(F, R.complex.d(s + 1))).module;
}

}  // namespace detail

inline DegreeShiftCheck degree_shift_check(const ChainComplex& L, const ChainComplex& M, int i, int B) {
  auto l = sup_homology(L), m = sup_homology(M);
  if (!l || !m) throw std::invalid_argument("degree_shift_check: complexes must have nonzero homology");
  DegreeShiftCheck out;
  out.i = i;
  out.l = *l;
  out.m = *m;
  if (i <= *l + *m) throw std::invalid_argument("degree_shift_check: needs i > sup H(L) + sup H(M)");
  const int j = i - *l - *m;
  if (j > B) throw BoundExceeded("degree_shift_check: degree exceeds bound");
  out.lhs = tor(L, M, i, std::max(B, i));
  out.rhs = tor(detail::top_cokernel(L, *l), detail::top_cokernel(M, *m), j, B);
  return out;
}

}  // namespace gorext
