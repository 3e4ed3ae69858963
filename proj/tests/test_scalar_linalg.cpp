#include <gtest/gtest.h>

#include <random>

#include "flatdef/error.hpp"
#include "flatdef/linalg.hpp"
#include "flatdef/scalar.hpp"

using namespace flatdef;

namespace {

Scalar q(long a, long b = 1) { return Scalar::rational(a, b); }

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, bool complex) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = complex ? Scalar(mpq_class(d(rng)), mpq_class(d(rng))) : Scalar(d(rng));
  return m;
}

}  // namespace

TEST(Scalar, FieldArithmetic) {
  Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ(i * i, Scalar(-1));
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  Scalar z = q(3, 4) + q(-2, 5) * i;
  EXPECT_TRUE((z * z.inverse()).is_one());
  EXPECT_EQ(z * z.conj(), Scalar(z.norm()));
  EXPECT_EQ(z / z, Scalar(1));
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-3/4", "i", "-i", "1/2+3/5*i", "2-i", "-5/7*i", " 3 / 9 "}) {
    Scalar x = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(x.to_string()), x) << s;
  }
  EXPECT_EQ(Scalar::parse("3/9"), q(1, 3));
  EXPECT_EQ(Scalar::parse("1/2-1/3*i"), Scalar(mpq_class(1, 2), mpq_class(-1, 3)));
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse("abc"), Error);
  EXPECT_THROW(Scalar::parse(""), Error);
}

TEST(Linalg, RrefAndKernel) {
  Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  RrefResult r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  Subspace k = kernel(m);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(is_zero(m.apply(k.basis_vectors()[0])));
}

TEST(Linalg, RankNullityProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = random_matrix(r, c, rng, trial % 2 == 1);
    Subspace k = kernel(m);
    EXPECT_EQ(rank(m) + k.dim(), c);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Linalg, InverseProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(4, 4, rng, trial % 2 == 0);
    if (rank(m) < 4) continue;
    EXPECT_EQ(m * inverse(m), Matrix::identity(4));
  }
  EXPECT_THROW(inverse(Matrix::from_rows(2, {{1, 2}, {2, 4}})), InvalidInput);
}

TEST(Subspace, CanonicalForm) {
  Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(3, {{1, 2, 1}, {2, 1, -1}, {0, 0, 0}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vector{1, 0, -1}));
  EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
  EXPECT_EQ(span_join(a, Subspace::span(3, {{1, 0, 0}})), Subspace::full(3));
  EXPECT_THROW(span_join(a, Subspace(2)), DimensionError);
}

TEST(EchelonBasis, MatchesBatchSpan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> vs;
    EchelonBasis eb(5);
    for (int k = 0; k < 6; ++k) {
      Matrix m = random_matrix(1, 5, rng, trial % 3 == 0);
      Vector v(m.row(0).begin(), m.row(0).end());
      if (k % 2 == 1 && !vs.empty()) v = add(vs.back(), scale(q(1, 2), vs.front()));
      vs.push_back(v);
      Vector inserted = eb.insert(v);
      EXPECT_TRUE(eb.contains(v));
      if (inserted.empty()) EXPECT_EQ(eb.dim(), Subspace::span(5, vs).dim());
    }
    EXPECT_EQ(eb.to_subspace(), Subspace::span(5, vs));
  }
}
