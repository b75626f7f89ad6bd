// Prime field arithmetic F_p with machine-word representatives.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gorext {

using Scalar = std::uint32_t;

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The scalar field F_p, 2 <= p < 2^31, p prime.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) {
      throw FieldError("characteristic out of range: " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        throw FieldError("characteristic is not prime: " + std::to_string(p));
      }
    }
    // Lemire's fastmod is exact for 32-bit numerators, which covers
    // a + b*c whenever p < 2^16.
    small_ = p < (1u << 16);
    magic_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(std::uint64_t a) const noexcept {
    if (small_ && a <= 0xFFFFFFFFull) {
      std::uint64_t low = magic_ * a;
      return static_cast<Scalar>((static_cast<unsigned __int128>(low) * p_) >> 64);
    }
    return static_cast<Scalar>(a % p_);
  }

  Scalar from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  /// a + b*c
  Scalar fma(Scalar a, Scalar b, Scalar c) const noexcept {
    return reduce(a + static_cast<std::uint64_t>(b) * c);
  }

  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return from_int(t);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

private:
  std::uint32_t p_;
  bool small_ = false;
  std::uint64_t magic_ = 0;
};

}  // namespace gorext
