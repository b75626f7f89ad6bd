// Dense polynomials in Z[t] with arbitrary-precision coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace gorext {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class IntegerPolynomial {
public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntegerPolynomial(std::initializer_list<long long> coeffs) {
    for (long long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntegerPolynomial monomial(std::size_t deg, BigInt coeff = 1) {
    std::vector<BigInt> c(deg + 1, 0);
    c[deg] = std::move(coeff);
    return IntegerPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  BigInt operator()(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  BigRational evaluate(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + BigRational(*it);
    return r;
  }

  IntegerPolynomial derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
    return IntegerPolynomial(std::move(d));
  }

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a) {
    std::vector<BigInt> c = a.c_;
    for (auto& x : c) x = -x;
    return IntegerPolynomial(std::move(c));
  }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a + (-b); }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntegerPolynomial(std::move(c));
  }
  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.c_ == b.c_; }

  IntegerPolynomial pow(unsigned e) const {
    IntegerPolynomial r{1};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Human-readable form such as "1 - t - 2t^2".
  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      BigInt mag = abs(c_[i]);
      if (first) {
        if (c_[i] < 0) os << "-";
      } else {
        os << (c_[i] < 0 ? " - " : " + ");
      }
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

}  // namespace gorext
