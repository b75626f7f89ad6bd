// Integer polynomials and rational power series for Poincare/Bass series of
// rings of codepth <= 3: the d(t) table, factor and root facts about d(t),
// and the Serre bound.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gorext/intpoly.hpp"

namespace gorext {

class RestrictionViolated : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class NotInvertible : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
class DegreeTooLarge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Division

/// a = q b + r over Q, returned only when q and r are integral.
struct PolyDivision {
  IntegerPolynomial quotient, remainder;
};

inline std::optional<PolyDivision> divide_integral(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_integral: division by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lead = b.coeffs().back();
  std::vector<BigInt> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
  for (int k = a.degree(); k >= db; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt f = top / lead;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return PolyDivision{IntegerPolynomial(std::move(q)), IntegerPolynomial(std::move(r))};
}

/// b divides a in Z[t].
inline bool divides(const IntegerPolynomial& b, const IntegerPolynomial& a) {
  auto d = divide_integral(a, b);
  return d && d->remainder.is_zero();
}

inline IntegerPolynomial exact_quotient(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  auto d = divide_integral(a, b);
  if (!d || !d->remainder.is_zero()) throw std::domain_error("exact_quotient: " + b.str() + " does not divide " + a.str());
  return d->quotient;
}

// ---------------------------------------------------------------------------
// Rational series

struct RationalSeries {
  IntegerPolynomial numerator{1}, denominator{1};

  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return {a.numerator * b.numerator, a.denominator * b.denominator};
  }
};

/// First B + 1 power series coefficients of n / d, by long division; the
/// constant term of d must be a unit.
inline std::vector<BigInt> series_coefficients(const RationalSeries& s, int B) {
  const BigInt d0 = s.denominator.coeff(0);
  if (d0 != 1 && d0 != -1) throw NotInvertible("series_coefficients: constant term of " + s.denominator.str() + " is not +-1");
  std::vector<BigInt> out;
  for (int i = 0; i <= B; ++i) {
    BigInt c = s.numerator.coeff(static_cast<std::size_t>(i));
    for (int j = 1; j <= i && j <= s.denominator.degree(); ++j)
      c -= s.denominator.coeff(static_cast<std::size_t>(j)) * out[static_cast<std::size_t>(i - j)];
    out.push_back(c * d0);  // d0 = d0^{-1}
  }
  return out;
}

/// (1 + t)^e / (1 - sum_j r_j t^{j+1}), with r_j = rank H_j(K) for j >= 1.
inline RationalSeries serre_denominator(const std::vector<std::uint64_t>& koszul_ranks, int e) {
  std::vector<BigInt> den{1, 0};
  for (std::size_t j = 0; j < koszul_ranks.size(); ++j) {
    den.resize(std::max(den.size(), j + 3), 0);
    den[j + 2] -= BigInt(koszul_ranks[j]);
  }
  return {IntegerPolynomial{1, 1}.pow(static_cast<unsigned>(e)), IntegerPolynomial(std::move(den))};
}

// ---------------------------------------------------------------------------
// The d(t) table for rings of codepth <= 3 that are not complete intersections

enum class CodepthType { GO, TE, B, G, H };

struct CodepthClassRow {
  CodepthType type = CodepthType::GO;
  int l = 0, m = 0, p = 0, q = 0, r = 0;

  std::string name() const {
    switch (type) {
      case CodepthType::GO: return "GO";
      case CodepthType::TE: return "TE";
      case CodepthType::B: return "B";
      case CodepthType::G: return "G(" + std::to_string(r) + ")";
      case CodepthType::H: return "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
  }
  int codepth() const { return type == CodepthType::GO ? 2 : 3; }
};

/// The first restriction of the row that fails, if any.
inline std::optional<std::string> violated_restriction(const CodepthClassRow& row) {
  const int l = row.l, m = row.m;
  if (row.type == CodepthType::GO) {
    if (!(l >= 1)) return "l >= 1";
    return std::nullopt;
  }
  if (!(m > l + 1)) return "m > l + 1";
  if (!(l + 1 >= 3)) return "l + 1 >= 3";
  if (row.type == CodepthType::G) {
    if (!(l + 1 >= row.r)) return "l + 1 >= r";
    if (!(row.r >= 2)) return "r >= 2";
  }
  if (row.type == CodepthType::H) {
    if (!(l >= row.p)) return "l >= p";
    if (!(row.p >= 0)) return "p >= 0";
    if (!(m - l >= row.q)) return "m - l >= q";
    if (!(row.q >= 0)) return "q >= 0";
  }
  return std::nullopt;
}

inline IntegerPolynomial table_d(const CodepthClassRow& row) {
  if (auto bad = violated_restriction(row)) throw RestrictionViolated(row.name() + ": restriction " + *bad + " fails");
  const long long l = row.l, m = row.m;
  switch (row.type) {
    case CodepthType::GO: return {1, -1, -l};
    case CodepthType::TE: return {1, -1, -l, -(m - l - 3), 0, -1};
    case CodepthType::B: return {1, -1, -l, -(m - l - 1), 1};
    case CodepthType::G: return {1, -1, -l, -(m - l), 1};
    case CodepthType::H: return {1, -1, -l, -(m - l - row.p), row.q};
  }
  return {};
}

/// Every admissible row with all parameters in [0, cap].
inline std::vector<CodepthClassRow> table_rows(int cap) {
  std::vector<CodepthClassRow> out;
  for (int l = 0; l <= cap; ++l) {
    CodepthClassRow go{CodepthType::GO, l};
    if (!violated_restriction(go)) out.push_back(go);
    for (int m = 0; m <= cap; ++m) {
      for (auto t : {CodepthType::TE, CodepthType::B}) {
        CodepthClassRow row{t, l, m};
        if (!violated_restriction(row)) out.push_back(row);
      }
      for (int r = 0; r <= cap; ++r) {
        CodepthClassRow row{CodepthType::G, l, m, 0, 0, r};
        if (!violated_restriction(row)) out.push_back(row);
      }
      for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
          CodepthClassRow row{CodepthType::H, l, m, p, q};
          if (!violated_restriction(row)) out.push_back(row);
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factors with constant term 1

namespace detail {

inline std::vector<BigInt> divisors_signed(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  for (BigInt k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      out.push_back(-k);
      if (k * k != n) {
        out.push_back(n / k);
        out.push_back(-(n / k));
      }
    }
  return out;
}

inline bool is_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = boost::multiprecision::sqrt(n);
  return s * s == n;
}

/// Candidates 1 + a t and 1 + a t + b t^2 that can divide d with d(0) = 1:
/// the top coefficient divides lead(d), and every reciprocal root of d is
/// bounded by R = 1 + max |d_i|, so |a| <= 2R.
inline std::vector<IntegerPolynomial> small_factor_candidates(const IntegerPolynomial& d) {
  BigInt R = 0;
  for (const auto& c : d.coeffs()) R = std::max(R, BigInt(abs(c)));
  R += 1;
  std::vector<IntegerPolynomial> out;
  for (const auto& a : divisors_signed(d.coeffs().back())) out.push_back(IntegerPolynomial(std::vector<BigInt>{1, a}));
  if (d.degree() >= 2)
    for (const auto& b : divisors_signed(d.coeffs().back()))
      for (BigInt a = -2 * R; a <= 2 * R; ++a) out.push_back(IntegerPolynomial(std::vector<BigInt>{1, a, b}));
  return out;
}

inline bool irreducible_small(const IntegerPolynomial& p) {
  if (p.degree() <= 1) return true;
  if (p.degree() == 2) return !is_square(p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0));
  return false;
}

inline bool has_negative_coefficient(const IntegerPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) return true;
  return false;
}

}  // namespace detail

/// Irreducible factors (with repetition, constant term 1) of d with d(0) = 1
/// and deg d <= 5. A reducible polynomial of degree <= 5 has a factor of
/// degree <= 2, so peeling linear then quadratic factors is complete.
inline std::vector<IntegerPolynomial> factor_constant_one(IntegerPolynomial d) {
  if (d.coeff(0) != 1) throw std::invalid_argument("factor_constant_one: constant term must be 1");
  if (d.degree() > 5) throw DegreeTooLarge("factor_constant_one: degree " + std::to_string(d.degree()) + " > 5");
  std::vector<IntegerPolynomial> out;
  bool found = true;
  while (d.degree() >= 2 && found) {
    found = false;
    for (const auto& p : detail::small_factor_candidates(d)) {
      if (p.degree() >= d.degree() || !detail::irreducible_small(p)) continue;
      if (divides(p, d)) {
        out.push_back(p);
        d = exact_quotient(d, p);
        found = true;
        break;
      }
    }
  }
  if (d.degree() >= 1) out.push_back(d);
  std::sort(out.begin(), out.end(), [](const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

struct SquareFactorVerdict {
  bool pass = true;
  std::optional<IntegerPolynomial> certificate;  // p with p^2 | d
};

/// Looks for an irreducible p with constant term 1, a negative coefficient and
/// p^2 | d. Since 2 deg p <= deg d <= 5, only deg p <= 2 can occur.
inline SquareFactorVerdict square_factor_exclusion(const IntegerPolynomial& d) {
  if (d.degree() > 5) throw DegreeTooLarge("square_factor_exclusion: degree " + std::to_string(d.degree()) + " > 5");
  if (d.coeff(0) != 1) throw std::invalid_argument("square_factor_exclusion: constant term must be 1");
  SquareFactorVerdict v;
  if (d.degree() < 2) return v;
  for (const auto& p : detail::small_factor_candidates(d)) {
    if (2 * p.degree() > d.degree() || !detail::irreducible_small(p) || !detail::has_negative_coefficient(p)) continue;
    if (divides(p * p, d)) {
      v.pass = false;
      v.certificate = p;
      return v;
    }
  }
  return v;
}

/// d = s q with s the product of the irreducible factors of d having
/// constant term 1 and a negative coefficient.
struct NegativeFactorSplit {
  IntegerPolynomial s{1}, q{1};
};

inline NegativeFactorSplit negative_factor_split(const IntegerPolynomial& d) {
  NegativeFactorSplit out;
  for (const auto& f : factor_constant_one(d)) {
    if (detail::has_negative_coefficient(f)) out.s = out.s * f;
    else out.q = out.q * f;
  }
  return out;
}

/// The polynomial step behind "Ext^{>>0}(D, A) = 0 forces finite injective
/// dimension": if I(t) = r / ((1+t) d) and d divides r^2 (up to powers of t),
/// then with no repeated negative factor in d, s divides r and
/// (1+t) q I(t) = r / s is a Laurent polynomial.
struct BassReduction {
  bool d_divides_r_squared = false;
  bool s_divides_r = false;
  NegativeFactorSplit split;
  std::optional<IntegerPolynomial> reduced;  // r / s
};

inline BassReduction bass_numerator_reduction(const IntegerPolynomial& d, const IntegerPolynomial& r) {
  BassReduction out;
  out.split = negative_factor_split(d);
  out.d_divides_r_squared = divides(d, r * r);
  out.s_divides_r = divides(out.split.s, r);
  if (out.s_divides_r) out.reduced = exact_quotient(r, out.split.s);
  return out;
}

// ---------------------------------------------------------------------------
// Real roots in (0, 1)

namespace detail {

using RatPoly = std::vector<BigRational>;  // low degree first

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const IntegerPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  return a;
}

inline RatPoly rat_quot(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  return q;
}

inline RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  return d;
}

inline BigRational rat_eval(const RatPoly& p, const BigRational& x) {
  BigRational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

inline int sign_changes(const std::vector<RatPoly>& seq, const BigRational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    BigRational v = rat_eval(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct roots of a nonzero p in the open interval (0, 1).
inline int distinct_roots_in_unit_interval(RatPoly p) {
  trim(p);
  if (p.size() <= 1) return 0;
  RatPoly g = rat_gcd(p, rat_derivative(p));
  RatPoly s = g.size() > 1 ? rat_quot(p, g) : p;  // squarefree part
  while (!s.empty() && s.front() == 0) s.erase(s.begin());  // drop the root 0
  if (s.size() <= 1) return 0;
  std::vector<RatPoly> seq{s, rat_derivative(s)};
  while (true) {
    RatPoly r = rat_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  int count = sign_changes(seq, 0) - sign_changes(seq, 1);  // roots in (0, 1]
  if (rat_eval(s, 1) == 0) --count;
  return count;
}

}  // namespace detail

struct SimpleRootVerdict {
  int roots = 0;           // distinct roots in (0, 1)
  int multiple_roots = 0;  // of those, how many are roots of gcd(d, d')
  bool pass() const { return multiple_roots == 0; }
};

inline SimpleRootVerdict simple_root_check(const IntegerPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("simple_root_check: zero polynomial");
  detail::RatPoly p = detail::to_rat(d);
  SimpleRootVerdict v;
  v.roots = detail::distinct_roots_in_unit_interval(p);
  detail::RatPoly g = detail::rat_gcd(p, detail::rat_derivative(p));
  v.multiple_roots = g.size() > 1 ? detail::distinct_roots_in_unit_interval(g) : 0;
  return v;
}

// ---------------------------------------------------------------------------
// The pole at t = 1

struct PoleFactorization {
  int l = 0;
  IntegerPolynomial expansion;              // (1 + t)(1 - t)(1 - t - (l-1) t^2)
  bool root_at_one = false;
  bool h_shape = false;                     // 1 - t - L t^2 - C t^3 + Q t^4 for integers L, C, Q
  long long L = 0, C = 0, Q = 0;
  std::vector<CodepthClassRow> matches;     // rows H(p, q) meeting the table restrictions
  bool holds() const { return root_at_one && h_shape; }
};

/// Expands the product and lists every admissible H(p, q) row (parameters
/// found from the coefficients: L = l_row, C = m - l - p, Q = q) whose d(t)
/// equals it, rather than assuming how the parameters correspond.
inline PoleFactorization pole_factorization_check(int l) {
  if (l < 2) throw std::invalid_argument("pole_factorization_check: l must be >= 2");
  PoleFactorization out;
  out.l = l;
  out.expansion = IntegerPolynomial{1, 1} * IntegerPolynomial{1, -1} * IntegerPolynomial{1, -1, -(l - 1)};
  out.root_at_one = out.expansion(BigInt(1)) == 0;
  const auto& e = out.expansion;
  out.h_shape = e.degree() <= 4 && e.coeff(0) == 1 && e.coeff(1) == -1;
  if (!out.h_shape) return out;
  const long long L = out.L = static_cast<long long>(-e.coeff(2));
  const long long C = out.C = static_cast<long long>(-e.coeff(3));
  const long long Q = out.Q = static_cast<long long>(e.coeff(4));
  for (long long p = 0; p <= L; ++p) {
    const long long m = C + L + p;
    CodepthClassRow row{CodepthType::H, static_cast<int>(L), static_cast<int>(m), static_cast<int>(p), static_cast<int>(Q)};
    if (violated_restriction(row)) continue;
    if (table_d(row) == e) out.matches.push_back(row);
  }
  return out;
}

}  // namespace gorext
