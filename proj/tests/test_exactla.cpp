#include <gtest/gtest.h>

#include <random>

#include "gorext/linalg.hpp"

using namespace gorext;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const PrimeField& F, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (auto& x : m.data()) x = static_cast<Scalar>(rng() % F.characteristic());
  return m;
}

// Counts kernel vectors by enumerating all of F_p^cols.
std::size_t brute_kernel_size(const PrimeField& F, const Matrix& m) {
  const std::size_t p = F.characteristic();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= p;
  std::size_t count = 0;
  Vec v(m.cols(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& x : v) {
      x = static_cast<Scalar>(c % p);
      c /= p;
    }
    if (is_zero(apply(F, m, v))) ++count;
  }
  return count;
}

}  // namespace

TEST(Field, RejectsNonPrime) {
  EXPECT_THROW(PrimeField(1), FieldError);
  EXPECT_THROW(PrimeField(9), FieldError);
  EXPECT_THROW(PrimeField(1u << 31), FieldError);
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(Field, InverseAndFastReduction) {
  for (std::uint32_t p : {2u, 3u, 7u, 65521u, 2147483647u}) {
    PrimeField F(p);
    std::mt19937_64 rng(p);
    for (int k = 0; k < 200; ++k) {
      Scalar a = static_cast<Scalar>(rng() % (p - 1) + 1);
      EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      Scalar b = static_cast<Scalar>(rng() % p), c = static_cast<Scalar>(rng() % p);
      EXPECT_EQ(F.fma(a, b, c), static_cast<Scalar>((a + static_cast<std::uint64_t>(b) * c) % p));
    }
  }
}

TEST(Rank, SpecExamples) {
  PrimeField F2(2);
  EXPECT_EQ(rank(F2, Matrix::identity(2)), 2u);
  EXPECT_EQ(rank(F2, Matrix(3, 4)), 0u);
  EXPECT_EQ(rank(F2, Matrix(2, 2, {1, 1, 1, 1})), 1u);
}

TEST(Kernel, SpecExamples) {
  PrimeField F2(2), F3(3);
  EXPECT_EQ(kernel(F2, Matrix::identity(3)).dim(), 0u);
  Subspace all = kernel(F2, Matrix(3, 3));
  EXPECT_EQ(all, Subspace::full(3));
  Subspace k = kernel(F3, Matrix(1, 2, {1, 1}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.vector(0), (Vec{1, 2}));
}

TEST(Solve, SpecExamples) {
  PrimeField F5(5);
  Vec b{3, 4, 1};
  EXPECT_EQ(*solve(F5, Matrix::identity(3), b), b);
  EXPECT_FALSE(solve(F5, Matrix(3, 3), b).has_value());
  EXPECT_EQ(*solve(F5, Matrix(2, 2, {1, 1, 0, 1}), Vec{3, 2}), (Vec{1, 2}));
  EXPECT_THROW(solve(F5, Matrix(2, 2), Vec{1}), DimensionError);
}

TEST(Subquotient, SpecExamples) {
  PrimeField F3(3);
  Subspace full = Subspace::full(3);
  EXPECT_EQ(subquotient_dim(F3, full, full), 0u);
  EXPECT_EQ(subquotient_dim(F3, full, Subspace(3)), 3u);
  Subspace z = Subspace::span(F3, 5, {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 2}, {0, 0, 0, 1, 1}});
  Subspace b = Subspace::span(F3, 5, {{1, 1, 1, 1, 1}});
  ASSERT_EQ(z.dim(), 4u);
  ASSERT_TRUE(z.contains(F3, b));
  EXPECT_EQ(subquotient_dim(F3, z, b), 3u);
  EXPECT_THROW(Subquotient(F3, b, z), ContainmentViolation);
}

TEST(Subquotient, RepresentativesSpanComplement) {
  PrimeField F(7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix top_gen = random_matrix(rng, F, 5, 8);
    Subspace top = Subspace::span(F, top_gen);
    Matrix coeffs = random_matrix(rng, F, 2, top.dim());
    Subspace bottom = Subspace::span(F, multiply(F, coeffs, top.basis()));
    Subquotient q(F, top, bottom);
    EXPECT_EQ(q.dim(), top.dim() - bottom.dim());
    // reps + bottom = top
    std::vector<Vec> all;
    for (std::size_t i = 0; i < q.dim(); ++i) all.push_back(q.representative(i));
    for (std::size_t i = 0; i < bottom.dim(); ++i) all.push_back(bottom.vector(i));
    EXPECT_EQ(Subspace::span(F, 8, all), top);
    // coordinates invert lift on the representatives
    for (std::size_t i = 0; i < q.dim(); ++i) {
      Vec c = q.coordinates(F, add(F, q.representative(i), bottom.dim() ? bottom.vector(0) : Vec(8, 0)));
      Vec e(q.dim(), 0);
      e[i] = 1;
      EXPECT_EQ(c, e);
    }
  }
}

TEST(Properties, RankNullityAgainstEnumeration) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      Matrix m = random_matrix(rng, F, r, c);
      const std::size_t rk = rank(F, m);
      Subspace k = kernel(F, m);
      EXPECT_EQ(rk + k.dim(), c);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < k.dim(); ++i) expect *= p;
      EXPECT_EQ(brute_kernel_size(F, m), expect);
      for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(apply(F, m, k.vector(i))));
    }
  }
}

TEST(Properties, KernelIsCanonical) {
  PrimeField F(5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, F, 3, 6);
    // Row operations do not change the kernel.
    Matrix g = random_matrix(rng, F, 3, 3);
    while (rank(F, g) < 3) g = random_matrix(rng, F, 3, 3);
    EXPECT_EQ(kernel(F, m), kernel(F, multiply(F, g, m)));
  }
}

TEST(Properties, SolveFindsSolutionWhenRankPermits) {
  PrimeField F(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = random_matrix(rng, F, 4, 3);
    Vec b(4);
    for (auto& x : b) x = static_cast<Scalar>(rng() % 3);
    Matrix aug = hstack({m, Matrix::from_columns(4, {b})}, 4);
    auto x = solve(F, m, b);
    EXPECT_EQ(x.has_value(), rank(F, aug) == rank(F, m));
    if (x) {
      EXPECT_EQ(apply(F, m, *x), b);
    }
  }
}

TEST(Properties, IntersectionDimensionFormula) {
  PrimeField F(2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    Subspace a = Subspace::span(F, random_matrix(rng, F, 3, 6));
    Subspace b = Subspace::span(F, random_matrix(rng, F, 4, 6));
    Subspace i = intersect(F, a, b);
    EXPECT_EQ(i.dim() + sum(F, a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(F, i));
    EXPECT_TRUE(b.contains(F, i));
  }
}
