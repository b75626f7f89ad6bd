#include <gtest/gtest.h>

#include <random>

#include "gorext/groebner.hpp"

using namespace gorext;

namespace {

const char* kIdeals[] = {"x^2",         "x^4",           "x^2, x*y, y^2", "x^2, y^2",         "x^3, y^2, x^2*y",
                         "x^2 - y, y^2", "x*y, x^3 - y^3", "x, y, z",       "x^2, y^2, z^2, x*y*z", "x^2, x*y, y^3"};

}  // namespace

TEST(HilbertSeries, SpecExamples) {
  EXPECT_EQ(hilbert_series(algebra_from_ideal("x^2, x*y, y^2", 2)), (IntegerPolynomial{1, 2}));
  EXPECT_EQ(hilbert_series(algebra_from_ideal("x^4", 3)), (IntegerPolynomial{1, 1, 1, 1}));
  EXPECT_EQ(hilbert_series(algebra_from_ideal("x^2, y^2", 2)), (IntegerPolynomial{1, 2, 1}));
}

TEST(Socle, SpecExamples) {
  auto A = algebra_from_ideal("x^2, x*y, y^2", 2);
  Subspace s = socle(A);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_EQ(s, A.maximal_ideal());
  auto B = algebra_from_ideal("x^2, y^2", 3);
  EXPECT_EQ(socle(B).dim(), 1u);
  auto C = algebra_from_ideal("x^2", 5);
  EXPECT_EQ(socle(C), Subspace::span(C.field(), 2, {{0, 1}}));
}

TEST(Edim, SpecExamples) {
  EXPECT_EQ(edim(algebra_from_ideal("x^3", 2)), 1u);
  EXPECT_EQ(edim(algebra_from_ideal("x^2, x*y, y^2", 2)), 2u);
  EXPECT_EQ(edim(algebra_from_ideal("x^2, y^2, z^2, x*y, x*z, y*z", 2)), 3u);
  EXPECT_EQ(edim(algebra_from_ideal("x, y", 2)), 0u);
  // x^2 - y makes y redundant
  EXPECT_EQ(edim(algebra_from_ideal("x^2 - y, y^2", 2)), 1u);
}

TEST(Length, SpecExamples) {
  auto A = algebra_from_ideal("x^3", 2);
  EXPECT_EQ(length(Subspace(3)), 0u);
  EXPECT_EQ(length(Subspace::full(A.dim())), 3u);
  auto B = algebra_from_ideal("x^2, x*y, y^2", 2);
  EXPECT_EQ(length(B.maximal_ideal()), 2u);
}

TEST(Validation, RejectsBrokenTables) {
  PrimeField F(2);
  // 1, a with a*a = 1: not local (a is a unit)
  std::vector<Scalar> notlocal{1, 0, 0, 1, 0, 1, 1, 0};
  EXPECT_THROW(LocalAlgebra(F, {"1", "a"}, notlocal, 0, {1}), AlgebraError);
  // non-commutative table
  std::vector<Scalar> noncomm(27, 0);
  auto set = [&](int i, int j, int l) { noncomm[(i * 3 + j) * 3 + l] = 1; };
  for (int i = 0; i < 3; ++i) set(0, i, i), set(i, 0, i);
  set(1, 2, 2);
  EXPECT_THROW(LocalAlgebra(F, {"1", "a", "b"}, noncomm, 0, {1, 2}), AlgebraError);
  // commutative, unital, closed m, but not associative: a*a = b, a*b = a
  std::vector<Scalar> nonassoc(27, 0);
  auto put = [&](int i, int j, int l) { nonassoc[(i * 3 + j) * 3 + l] = 1; };
  for (int i = 0; i < 3; ++i) put(0, i, i), put(i, 0, i);
  put(1, 1, 2);
  put(1, 2, 1), put(2, 1, 1);
  EXPECT_THROW(LocalAlgebra(F, {"1", "a", "b"}, nonassoc, 0, {1, 2}), AlgebraError);
  // unit axiom
  std::vector<Scalar> nounit(8, 0);
  EXPECT_THROW(LocalAlgebra(F, {"1", "a"}, nounit, 0, {1}), AlgebraError);
  // basis not {unit} + maxideal
  std::vector<Scalar> ok{1, 0, 0, 1, 0, 1, 0, 0};
  EXPECT_NO_THROW(LocalAlgebra(F, {"1", "a"}, ok, 0, {1}));
  EXPECT_THROW(LocalAlgebra(F, {"1", "a"}, ok, 0, {}), AlgebraError);
  EXPECT_THROW(LocalAlgebra(F, {"1", "a"}, ok, 0, {0}), AlgebraError);
}

TEST(Properties, HilbertSumsAndSocleContainsTopLayer) {
  for (std::uint32_t p : {2u, 3u}) {
    for (const char* text : kIdeals) {
      auto A = algebra_from_ideal(text, p);
      IntegerPolynomial h = hilbert_series(A);
      BigInt total = 0;
      for (const auto& c : h.coeffs()) {
        EXPECT_GT(c, 0);
        total += c;
      }
      EXPECT_EQ(total, BigInt(A.dim())) << text;
      EXPECT_EQ(h.coeff(0), 1);
      const auto& pw = A.max_powers();
      const Subspace& last = pw[pw.size() - 2];
      if (A.dim() > 1) {
        EXPECT_TRUE(socle(A).contains(A.field(), last)) << text;
      }
      EXPECT_EQ(pw.back().dim(), 0u);
    }
  }
}

TEST(Properties, ColonLengthEqualsCokernelLength) {
  std::mt19937_64 rng(4);
  for (const char* text : kIdeals) {
    auto A = algebra_from_ideal(text, 3);
    for (int trial = 0; trial < 10; ++trial) {
      Vec x(A.dim(), 0);
      for (auto j : A.maxideal()) x[j] = static_cast<Scalar>(rng() % 3);
      Matrix mx = A.mult_matrix(x);
      const std::size_t colon = kernel(A.field(), mx).dim();
      const std::size_t coker = A.dim() - image(A.field(), mx).dim();
      EXPECT_EQ(colon, coker);
    }
  }
}

TEST(QuotientByIdeal, MatchesPresentation) {
  auto P = present("x^2, y^3", 3);
  Subspace I = ideal_generated(P.algebra, {P.element("x*y")});
  LocalAlgebra Q = quotient_by_ideal(P.algebra, I);
  LocalAlgebra direct = algebra_from_ideal("x^2, y^3, x*y", 3);
  EXPECT_EQ(Q.dim(), direct.dim());
  EXPECT_EQ(hilbert_series(Q), hilbert_series(direct));
  EXPECT_EQ(socle(Q).dim(), socle(direct).dim());
}

TEST(FreeRank, SpecExamples) {
  auto Q = algebra_from_ideal("x^2, x*y, y^2", 2);
  EXPECT_EQ(free_rank_over_base(over_residue_field(Q)), std::optional<std::size_t>(3));

  auto P = present("e^2", 2);
  auto Q2 = present("e^2, x^2 - e", 2);
  BaseChange B = base_change(P, Q2, {"e"});
  EXPECT_EQ(Q2.algebra.dim(), 4u);
  EXPECT_EQ(free_rank_over_base(B), std::optional<std::size_t>(2));
  LocalAlgebra R = B.fiber();
  EXPECT_EQ(R.dim(), 2u);
  EXPECT_EQ(hilbert_series(R), (IntegerPolynomial{1, 1}));

  auto K = present("z", 2);
  BaseChange toField = base_change(P, K, {"0"});
  EXPECT_FALSE(free_rank_over_base(toField).has_value());

  EXPECT_THROW(base_change(P, Q2, {"x"}), AlgebraError);  // x^2 != 0 in Q
}
