// Buchberger's algorithm for zero-dimensional ideals and the passage from
// an m-primary ideal to the multiplication table of its quotient.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gorext/algebra.hpp"
#include "gorext/multipoly.hpp"
#include "gorext/parse.hpp"

namespace gorext {

class NotZeroDimensional : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

class NotLocal : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

/// Remainder of f on division by G: no term is divisible by a leading monomial of G.
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G) {
  const PrimeField& F = f.field();
  MultiPoly p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    const MultiPoly* div = nullptr;
    for (const auto& g : G)
      if (g.leading_monomial().divides(lt.mono)) {
        div = &g;
        break;
      }
    if (div) {
      const Scalar s = F.neg(F.mul(lt.coeff, F.inv(div->leading_coeff())));
      p = p.add_scaled(div->times_term(lt.mono / div->leading_monomial(), 1), s);
    } else {
      rest.push_back(lt);
      p = p.add_scaled(MultiPoly::term(F, lt.mono, 1), F.neg(lt.coeff));
    }
  }
  return MultiPoly::from_terms(F, f.nvars(), std::move(rest));
}

/// A reduced degrevlex Groebner basis: monic generators sorted by leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(PrimeField field, std::size_t nvars, std::vector<MultiPoly> gens)
      : field_(field), nvars_(nvars), gens_(std::move(gens)) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
  bool is_unit_ideal() const noexcept { return gens_.size() == 1 && gens_[0].leading_monomial().is_one(); }

  MultiPoly reduce(const MultiPoly& f) const { return normal_form(f, gens_); }

private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<MultiPoly> gens_;
};

inline MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) { return G.reduce(f); }

inline GroebnerBasis buchberger(const std::vector<MultiPoly>& input) {
  if (input.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const PrimeField F = input.front().field();
  const std::size_t n = input.front().nvars();
  for (const auto& g : input)
    if (!(g.field() == F) || g.nvars() != n)
      throw std::invalid_argument("buchberger: generators live in different rings");

  std::vector<MultiPoly> G;
  for (const auto& g : input)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return GroebnerBasis(F, n, {});

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lcm_of = [&](std::size_t i, std::size_t j) { return lcm(G[i].leading_monomial(), G[j].leading_monomial()); };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it)
      if (degrevlex_compare(lcm_of(it->first, it->second), lcm_of(best->first, best->second)) < 0) best = it;
    const auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = G[i].leading_monomial();
    const Monomial& lj = G[j].leading_monomial();
    if (coprime(li, lj)) continue;
    const Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || !G[k].leading_monomial().divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;

    MultiPoly s = G[i].times_term(l / li, 1).add_scaled(G[j].times_term(l / lj, 1), F.neg(1));
    MultiPoly h = normal_form(s, G);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    const std::size_t nk = G.size() - 1;
    for (std::size_t k = 0; k < nk; ++k) pending.insert({k, nk});
  }

  // Minimalize, then interreduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].leading_monomial().divides(G[i].leading_monomial())) continue;
      // Of two equal leading monomials keep the earlier one.
      redundant = !(G[j].leading_monomial() == G[i].leading_monomial()) || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(F, n, std::move(reduced));
}

/// Monomials outside the leading-term ideal, in increasing degrevlex order.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
  const std::size_t n = G.nvars();
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : G.generators()) {
    const Monomial& lm = g.leading_monomial();
    if (lm.is_one()) return {};
    if (auto v = lm.pure_power_variable()) {
      if (bound[*v] == 0 || lm[*v] < bound[*v]) bound[*v] = lm[*v];
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bound[v] == 0)
      throw NotZeroDimensional("variable " + std::to_string(v) + " has no pure power among the leading terms");

  std::vector<Monomial> out;
  Monomial m(n);
  while (true) {
    bool standard = true;
    for (const auto& g : G.generators())
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    std::size_t v = 0;
    while (v < n && m[v] + 1 >= bound[v]) m[v++] = 0;
    if (v == n) break;
    ++m[v];
  }
  std::sort(out.begin(), out.end(), DegrevlexLess{});
  return out;
}

/// An algebra k[x_1..x_n]/I together with the data needed to turn
/// polynomials into algebra elements.
struct PresentedAlgebra {
  LocalAlgebra algebra;
  GroebnerBasis groebner;
  std::vector<std::string> variables;
  std::vector<Monomial> basis;  // standard monomials, 1 first

  MultiPoly reduce(const MultiPoly& f) const { return groebner.reduce(f); }

  /// Coordinates of the class of f.
  Vec element(const MultiPoly& f) const {
    Vec v(basis.size(), 0);
    const MultiPoly r = reduce(f);
    for (const auto& t : r.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), t.mono, DegrevlexLess{});
      v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
    }
    return v;
  }
  Vec element(const std::string& expr) const {
    return element(parse_poly(expr, algebra.field(), variables));
  }
  MultiPoly variable(std::size_t i) const {
    return MultiPoly::term(algebra.field(), Monomial::variable(variables.size(), i), 1);
  }
};

/// k[x_1..x_n]/I for an ideal I inside (x_1, ..., x_n) of finite colength.
/// The basis is the standard monomials with 1 first.
inline PresentedAlgebra present(const std::vector<MultiPoly>& gens, const std::vector<std::string>& names) {
  if (gens.empty()) throw std::invalid_argument("quotient_algebra: empty generator list");
  const PrimeField F = gens.front().field();
  const std::size_t n = gens.front().nvars();
  if (names.size() != n) throw std::invalid_argument("quotient_algebra: variable name count mismatch");
  for (const auto& g : gens)
    if (g.coefficient(Monomial(n)) != 0) throw NotLocal("generator " + g.str(names) + " has a unit term");

  GroebnerBasis G = buchberger(gens);
  std::vector<Monomial> basis = standard_monomials(G);
  if (basis.empty() || !basis.front().is_one()) throw NotLocal("constant monomial is not standard");

  const std::size_t d = basis.size();
  std::vector<Scalar> mult(d * d * d, 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      MultiPoly prod = normal_form(MultiPoly::term(F, basis[a] * basis[b], 1), G);
      for (const auto& t : prod.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), t.mono, DegrevlexLess{});
        const auto l = static_cast<std::size_t>(it - basis.begin());
        mult[(a * d + b) * d + l] = t.coeff;
        mult[(b * d + a) * d + l] = t.coeff;
      }
    }
  std::vector<std::string> labels;
  std::vector<std::size_t> maxideal;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(basis[i].str(names));
    if (i) maxideal.push_back(i);
  }
  Presentation pres;
  pres.variables = names;
  for (const auto& g : gens) pres.generators.push_back(g.str(names));
  try {
    LocalAlgebra A = LocalAlgebra(F, std::move(labels), std::move(mult), 0, std::move(maxideal))
                         .with_presentation(std::move(pres));
    return PresentedAlgebra{std::move(A), std::move(G), names, std::move(basis)};
  } catch (const AlgebraError& e) {
    throw NotLocal(std::string("quotient failed validation: ") + e.what());
  }
}

inline LocalAlgebra quotient_algebra(const std::vector<MultiPoly>& gens, const std::vector<std::string>& names) {
  return present(gens, names).algebra;
}

inline LocalAlgebra quotient_algebra(const ParsedIdeal& ideal) {
  return quotient_algebra(ideal.generators, ideal.variables);
}

inline PresentedAlgebra present(const std::string& text, std::uint32_t p,
                                std::optional<std::vector<std::string>> vars = std::nullopt) {
  ParsedIdeal parsed = parse_ideal(text, PrimeField(p), std::move(vars));
  return present(parsed.generators, parsed.variables);
}

/// Convenience: parse "x^2, x*y, y^2" over F_p and build the quotient.
inline LocalAlgebra algebra_from_ideal(const std::string& text, std::uint32_t p,
                                       std::optional<std::vector<std::string>> vars = std::nullopt) {
  return present(text, p, std::move(vars)).algebra;
}

/// Substitutes polynomials of another ring for the variables of f.
inline MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& values) {
  if (values.size() != f.nvars()) throw std::invalid_argument("substitute: wrong number of values");
  if (values.empty()) throw std::invalid_argument("substitute: nothing to substitute");
  MultiPoly out(values.front().field(), values.front().nvars());
  for (const auto& t : f.terms()) {
    MultiPoly m = MultiPoly::constant(out.field(), out.nvars(), t.coeff);
    for (std::size_t i = 0; i < f.nvars(); ++i) m = m * values[i].pow(t.mono[i]);
    out = out + m;
  }
  return out;
}

/// The base change P -> Q sending the i-th variable of P to images[i]
/// (polynomials in the variables of Q). Fails if this is not well defined.
inline BaseChange base_change(const PresentedAlgebra& P, const PresentedAlgebra& Q,
                              const std::vector<std::string>& images) {
  std::vector<MultiPoly> vals;
  for (const auto& e : images) vals.push_back(parse_poly(e, Q.algebra.field(), Q.variables));
  for (const auto& g : P.groebner.generators())
    if (!Q.reduce(substitute(g, vals)).is_zero())
      throw AlgebraError("base change: relation of the base does not map to zero");
  Matrix phi(Q.algebra.dim(), P.algebra.dim());
  for (std::size_t i = 0; i < P.basis.size(); ++i)
    phi.set_column(i, Q.element(substitute(MultiPoly::term(P.algebra.field(), P.basis[i], 1), vals)));
  return BaseChange(P.algebra, Q.algebra, std::move(phi));
}

}  // namespace gorext
