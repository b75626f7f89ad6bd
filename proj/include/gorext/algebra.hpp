// Finite-dimensional commutative local algebras over F_p, given by
// structure constants, and their ring-theoretic invariants.
#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorext/linalg.hpp"
#include "gorext/intpoly.hpp"

namespace gorext {

class AlgebraError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// How an algebra was presented, when it came from an ideal.
struct Presentation {
  std::vector<std::string> variables;
  std::vector<std::string> generators;
};

/// A commutative local k-algebra A of finite rank. Basis element `unit`
/// is the identity and the remaining basis elements span the maximal ideal.
/// Every axiom (commutativity, associativity, unit, nilpotence of m) is
/// checked at construction.
class LocalAlgebra {
public:
  /// `mult[(i*n + j)*n + l]` is the coefficient of e_l in e_i e_j.
  LocalAlgebra(PrimeField field, std::vector<std::string> labels, std::vector<Scalar> mult,
               std::size_t unit, std::vector<std::size_t> maxideal)
  {
    auto fresh = std::make_shared<Data>(field);
    Data& d = *fresh;
    d.n = labels.size();
    d.labels = std::move(labels);
    d.mult = std::move(mult);
    d.unit = unit;
    d.maxideal = std::move(maxideal);
    validate_and_build(d);
    data_ = std::move(fresh);
  }

  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->n; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::size_t unit() const noexcept { return data_->unit; }
  const std::vector<std::size_t>& maxideal() const noexcept { return data_->maxideal; }
  const std::vector<Scalar>& structure_constants() const noexcept { return data_->mult; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t l) const noexcept {
    const std::size_t n = data_->n;
    return data_->mult[(i * n + j) * n + l];
  }

  /// Matrix of multiplication by e_i; column j holds e_i e_j.
  const Matrix& left(std::size_t i) const noexcept { return data_->left[i]; }

  Vec basis_vector(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
  }
  Vec one() const { return basis_vector(unit()); }
  Vec zero() const { return Vec(dim(), 0); }

  Matrix mult_matrix(const Vec& a) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) add_scaled_inplace(field(), m, a[i], left(i));
    return m;
  }
  Vec multiply(const Vec& a, const Vec& b) const { return apply(field(), mult_matrix(a), b); }

  /// Image of a in the residue field A/m.
  Scalar residue(const Vec& a) const { return a[unit()]; }
  bool in_maximal_ideal(const Vec& a) const { return residue(a) == 0; }

  /// m^0 = A, m^1 = m, ..., ending with the first zero power.
  const std::vector<Subspace>& max_powers() const noexcept { return data_->powers; }
  const Subspace& maximal_ideal() const noexcept { return data_->powers.at(1); }

  /// Elements of m whose classes form a basis of m/m^2; together with 1
  /// they generate A as an algebra.
  const std::vector<Vec>& max_generators() const noexcept { return data_->max_gens; }
  const std::vector<Matrix>& max_generator_actions() const noexcept { return data_->max_gen_left; }

  /// Least N with m^N = 0.
  std::size_t loewy_length() const noexcept { return data_->powers.size() - 1; }

  const std::optional<Presentation>& presentation() const noexcept { return data_->presentation; }
  LocalAlgebra with_presentation(Presentation p) const {
    LocalAlgebra copy = *this;
    auto fresh = std::make_shared<Data>(*data_);
    fresh->presentation = std::move(p);
    copy.data_ = std::move(fresh);
    return copy;
  }

  /// Same field, basis labels, unit, maximal ideal and structure constants.
  bool same_as(const LocalAlgebra& other) const noexcept {
    if (data_ == other.data_) return true;
    const Data& a = *data_;
    const Data& b = *other.data_;
    return a.field == b.field && a.n == b.n && a.unit == b.unit && a.maxideal == b.maxideal &&
           a.mult == b.mult;
  }

private:
  struct Data {
    explicit Data(PrimeField f) : field(f) {}
    PrimeField field;
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<Scalar> mult;
    std::size_t unit = 0;
    std::vector<std::size_t> maxideal;
    std::vector<Matrix> left;
    std::vector<Subspace> powers;
    std::vector<Vec> max_gens;
    std::vector<Matrix> max_gen_left;
    std::optional<Presentation> presentation;
  };

  static void validate_and_build(Data& d) {
    const std::size_t n = d.n;
    const PrimeField& F = d.field;
    if (n == 0) throw AlgebraError("algebra must have positive dimension");
    if (d.mult.size() != n * n * n) throw AlgebraError("structure tensor must have n^3 entries");
    for (Scalar s : d.mult)
      if (s >= F.characteristic()) throw AlgebraError("structure constant not reduced mod p");
    if (d.unit >= n) throw AlgebraError("unit index out of range");
    {
      std::vector<bool> seen(n, false);
      seen[d.unit] = true;
      for (auto j : d.maxideal) {
        if (j >= n || seen[j]) throw AlgebraError("basis must be {unit} plus the maximal ideal basis");
        seen[j] = true;
      }
      if (d.maxideal.size() + 1 != n)
        throw AlgebraError("basis must be {unit} plus the maximal ideal basis");
    }
    auto c = [&](std::size_t i, std::size_t j, std::size_t l) { return d.mult[(i * n + j) * n + l]; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (c(i, j, l) != c(j, i, l)) throw AlgebraError("multiplication is not commutative");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (c(d.unit, i, l) != (i == l ? 1u : 0u)) throw AlgebraError("unit axiom fails");

    d.left.assign(n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) d.left[i](l, j) = c(i, j, l);

    // (e_i e_j) e_l = e_i (e_j e_l) for all triples, i.e. L_{e_i e_j} = L_i L_j.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Matrix lhs(n, n);
        for (std::size_t a = 0; a < n; ++a) add_scaled_inplace(F, lhs, c(i, j, a), d.left[a]);
        if (!(lhs == gorext::multiply(F, d.left[i], d.left[j])))
          throw AlgebraError("multiplication is not associative");
      }

    for (auto i : d.maxideal)
      for (auto j : d.maxideal)
        if (c(i, j, d.unit) != 0) throw AlgebraError("maximal ideal basis does not span an ideal");

    d.powers.clear();
    d.powers.push_back(Subspace::full(n));
    std::vector<Vec> mvecs;
    for (auto j : d.maxideal) {
      Vec v(n, 0);
      v[j] = 1;
      mvecs.push_back(v);
    }
    d.powers.push_back(Subspace::span(F, n, mvecs));
    while (d.powers.back().dim() > 0) {
      if (d.powers.size() > n + 1) throw AlgebraError("maximal ideal is not nilpotent");
      const Subspace& prev = d.powers.back();
      std::vector<Vec> next;
      for (std::size_t b = 0; b < prev.dim(); ++b) {
        Vec v = prev.vector(b);
        for (auto j : d.maxideal) next.push_back(apply(F, d.left[j], v));
      }
      Subspace s = Subspace::span(F, n, next);
      if (s.dim() == prev.dim()) throw AlgebraError("maximal ideal is not nilpotent");
      d.powers.push_back(std::move(s));
    }

    Subspace m2 = d.powers.size() > 2 ? d.powers[2] : Subspace(n);
    Subquotient top(F, d.powers[1], m2);
    for (std::size_t i = 0; i < top.dim(); ++i) {
      d.max_gens.push_back(top.representative(i));
      Matrix act(n, n);
      for (std::size_t j = 0; j < n; ++j) add_scaled_inplace(F, act, d.max_gens.back()[j], d.left[j]);
      d.max_gen_left.push_back(std::move(act));
    }
  }

  std::shared_ptr<const Data> data_;
};

/// Hilbert series: coefficient i is dim m^i / m^{i+1}.
inline IntegerPolynomial hilbert_series(const LocalAlgebra& A) {
  std::vector<BigInt> c;
  const auto& pw = A.max_powers();
  for (std::size_t i = 0; i + 1 < pw.size(); ++i)
    c.emplace_back(static_cast<long long>(pw[i].dim() - pw[i + 1].dim()));
  return IntegerPolynomial(std::move(c));
}

/// The socle (0 : m).
inline Subspace socle(const LocalAlgebra& A) {
  std::vector<Matrix> parts;
  for (auto j : A.maxideal()) parts.push_back(A.left(j));
  if (parts.empty()) return Subspace::full(A.dim());
  return kernel(A.field(), vstack(parts, A.dim()));
}

/// Embedding dimension dim m/m^2.
inline std::size_t edim(const LocalAlgebra& A) { return A.max_generators().size(); }

inline std::size_t length(const Subspace& s) { return s.dim(); }

/// A/I for an ideal I contained in m, with basis the standard unit vectors
/// that are not pivots of I.
inline LocalAlgebra quotient_by_ideal(const LocalAlgebra& A, const Subspace& ideal) {
  const PrimeField& F = A.field();
  const std::size_t n = A.dim();
  if (ideal.dim() > 0) {
    for (std::size_t i = 0; i < ideal.dim(); ++i)
      if (!A.in_maximal_ideal(ideal.vector(i)))
        throw AlgebraError("quotient_by_ideal: ideal is not proper");
    for (std::size_t i = 0; i < ideal.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!ideal.contains(F, apply(F, A.left(j), ideal.vector(i))))
          throw AlgebraError("quotient_by_ideal: subspace is not an ideal");
  }
  Subquotient q(F, Subspace::full(n), ideal);
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < q.dim(); ++r) keep.push_back(q.representatives().pivots()[r]);
  const std::size_t m = keep.size();
  std::vector<std::string> labels;
  std::size_t unit = 0;
  std::vector<std::size_t> maxideal;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(A.labels()[keep[a]]);
    if (keep[a] == A.unit()) unit = a;
    else maxideal.push_back(a);
  }
  std::vector<Scalar> mult(m * m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec prod = A.left(keep[a]).column(keep[b]);
      Vec co = q.coordinates(F, prod);
      for (std::size_t l = 0; l < m; ++l) mult[(a * m + b) * m + l] = co[l];
    }
  return LocalAlgebra(F, std::move(labels), std::move(mult), unit, std::move(maxideal));
}

/// The ideal generated by the given elements.
inline Subspace ideal_generated(const LocalAlgebra& A, const std::vector<Vec>& gens) {
  std::vector<Vec> span;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < A.dim(); ++i) span.push_back(apply(A.field(), A.left(i), g));
  return Subspace::span(A.field(), A.dim(), span);
}

/// The residue field itself as a one-dimensional local algebra.
inline LocalAlgebra field_algebra(const PrimeField& F) {
  return LocalAlgebra(F, {"1"}, {1}, 0, {});
}

/// A unital k-algebra map P -> Q between local algebras; column i of
/// `structure_map` is the image of the i-th basis element of P.
class BaseChange {
public:
  BaseChange(LocalAlgebra base, LocalAlgebra total, Matrix structure_map)
      : base_(std::move(base)), total_(std::move(total)), phi_(std::move(structure_map)) {
    const PrimeField& F = base_.field();
    if (!(F == total_.field())) throw AlgebraError("base change: fields differ");
    if (phi_.rows() != total_.dim() || phi_.cols() != base_.dim())
      throw AlgebraError("base change: structure map has wrong shape");
    if (!(phi_.column(base_.unit()) == total_.one()))
      throw AlgebraError("base change: structure map is not unital");
    for (std::size_t i = 0; i < base_.dim(); ++i)
      for (std::size_t j = 0; j < base_.dim(); ++j) {
        Vec lhs = apply(F, phi_, base_.left(i).column(j));
        Vec rhs = total_.multiply(phi_.column(i), phi_.column(j));
        if (lhs != rhs) throw AlgebraError("base change: structure map is not multiplicative");
      }
  }

  const LocalAlgebra& base() const noexcept { return base_; }
  const LocalAlgebra& total() const noexcept { return total_; }
  const Matrix& structure_map() const noexcept { return phi_; }

  /// Image in Q of an element of P.
  Vec image(const Vec& p) const { return apply(base_.field(), phi_, p); }

  /// Matrix of multiplication on Q by the image of the i-th basis element of P.
  Matrix base_action(std::size_t i) const { return total_.mult_matrix(phi_.column(i)); }

  /// The ideal pQ, where p is the maximal ideal of the base.
  Subspace extended_max() const {
    std::vector<Vec> span;
    for (auto j : base_.maxideal()) {
      Matrix act = base_action(j);
      for (std::size_t c = 0; c < total_.dim(); ++c) span.push_back(act.column(c));
    }
    return Subspace::span(base_.field(), total_.dim(), span);
  }

  /// The closed fiber R = Q/pQ.
  LocalAlgebra fiber() const { return quotient_by_ideal(total_, extended_max()); }

private:
  LocalAlgebra base_, total_;
  Matrix phi_;
};

/// Q viewed over its residue field k -> Q.
inline BaseChange over_residue_field(const LocalAlgebra& Q) {
  Matrix phi(Q.dim(), 1);
  phi(Q.unit(), 0) = 1;
  return BaseChange(field_algebra(Q.field()), Q, std::move(phi));
}

/// A P-basis of Q together with the P-linear isomorphism P^r -> Q.
struct FreeBasis {
  std::size_t rank = 0;
  std::vector<Vec> basis;  // elements of Q
  Matrix iso;              // dim Q x (r * dim P); column s*dimP + i is phi(e_i) * basis[s]
};

/// Lifts a basis of Q/pQ and checks that P^r -> Q is bijective (Nakayama).
inline std::optional<FreeBasis> free_basis_over_base(const BaseChange& B) {
  const PrimeField& F = B.base().field();
  const std::size_t nq = B.total().dim(), np = B.base().dim();
  Subquotient top(F, Subspace::full(nq), B.extended_max());
  FreeBasis fb;
  fb.rank = top.dim();
  if (fb.rank * np != nq) return std::nullopt;
  for (std::size_t s = 0; s < fb.rank; ++s) fb.basis.push_back(top.representative(s));
  fb.iso = Matrix(nq, fb.rank * np);
  for (std::size_t s = 0; s < fb.rank; ++s)
    for (std::size_t i = 0; i < np; ++i) fb.iso.set_column(s * np + i, B.total().multiply(B.image(B.base().basis_vector(i)), fb.basis[s]));
  if (rank(F, fb.iso) != nq) return std::nullopt;
  return fb;
}

inline std::optional<std::size_t> free_rank_over_base(const BaseChange& B) {
  auto fb = free_basis_over_base(B);
  if (!fb) return std::nullopt;
  return fb->rank;
}

inline std::string describe(const LocalAlgebra& A) {
  std::ostringstream os;
  os << "LocalAlgebra(char=" << A.field().characteristic() << ", dim=" << A.dim() << ", basis=[";
  for (std::size_t i = 0; i < A.dim(); ++i) os << (i ? ", " : "") << A.labels()[i];
  os << "])";
  return os.str();
}

}  // namespace gorext
