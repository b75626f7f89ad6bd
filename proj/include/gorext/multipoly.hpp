// Multivariate polynomials over F_p in degree reverse lexicographic order.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gorext/field.hpp"

namespace gorext {

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
  }

  std::size_t nvars() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned& operator[](std::size_t i) noexcept { return e_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return e_; }
  unsigned degree() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0u); }
  bool is_one() const noexcept { return degree() == 0; }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// Index of the variable if this is a pure power x_i^a with a > 0.
  std::optional<std::size_t> pure_power_variable() const noexcept {
    std::optional<std::size_t> v;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (v) return std::nullopt;
      v = i;
    }
    return v;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
  }
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
    return m;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

  std::string str(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

private:
  std::vector<unsigned> e_;
};

/// -1, 0, 1 as a is smaller, equal, larger than b in degrevlex.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

struct DegrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return degrevlex_compare(a, b) < 0; }
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial stored as nonzero terms in strictly decreasing degrevlex order.
class MultiPoly {
public:
  MultiPoly(PrimeField field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(PrimeField field, std::size_t nvars, Scalar c) {
    MultiPoly p(field, nvars);
    if (c % field.characteristic() != 0) p.terms_.push_back({Monomial(nvars), c % field.characteristic()});
    return p;
  }
  static MultiPoly term(PrimeField field, Monomial m, Scalar c) {
    MultiPoly p(field, m.nvars());
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static MultiPoly from_terms(PrimeField field, std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; });
    MultiPoly p(field, nvars);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Scalar leading_coeff() const { return terms_.front().coeff; }

  Scalar coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coeff()));
  }

  MultiPoly scaled(Scalar s) const {
    MultiPoly r(field_, nvars_);
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, s);
    return r;
  }

  /// c * m * this
  MultiPoly times_term(const Monomial& m, Scalar c) const {
    MultiPoly r(field_, nvars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }

  /// this + s * other, by merging the sorted term lists.
  MultiPoly add_scaled(const MultiPoly& other, Scalar s) const {
    MultiPoly r(field_, nvars_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == other.terms_.size()) c = 1;
      else c = degrevlex_compare(terms_[i].mono, other.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Scalar v = field_.mul(s, other.terms_[j].coeff);
        if (v) r.terms_.push_back({other.terms_[j].mono, v});
        ++j;
      } else {
        Scalar v = field_.fma(terms_[i].coeff, s, other.terms_[j].coeff);
        if (v) r.terms_.push_back({terms_[i].mono, v});
        ++i, ++j;
      }
    }
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return a.add_scaled(b, 1); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    return a.add_scaled(b, a.field_.neg(1));
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.field_, a.nvars_);
    for (const auto& t : b.terms_) r = r + a.times_term(t.mono, t.coeff);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(field_, nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Coefficients printed as symmetric representatives, e.g. "x^2 - y".
  std::string str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::int64_t c = field_.to_signed(t.coeff);
      std::int64_t mag = c < 0 ? -c : c;
      if (first) os << (c < 0 ? "-" : "");
      else os << (c < 0 ? " - " : " + ");
      if (t.mono.is_one()) os << mag;
      else if (mag == 1) os << t.mono.str(names);
      else os << mag << "*" << t.mono.str(names);
      first = false;
    }
    return os.str();
  }

private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace gorext
