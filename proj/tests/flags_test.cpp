#include <gtest/gtest.h>

#include <numeric>

#include "gitss/flags.hpp"
#include "oracles.hpp"

namespace gitss {
namespace {

using testing::Rng;

WeightVector ints(std::initializer_list<std::int64_t> v) {
  WeightVector out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

Matrix<Rational> identity_plus(std::size_t r, std::size_t row, std::size_t col, const Rational& v) {
  auto g = Matrix<Rational>::identity(r);
  g(row, col) += v;
  return g;
}

TEST(StandardWeightVector, Examples) {
  EXPECT_EQ(standard_weight_vector(3, 1), ints({-2, 1, 1}));
  EXPECT_EQ(standard_weight_vector(2, 1), ints({-1, 1}));
  EXPECT_EQ(standard_weight_vector(4, 2), ints({-2, -2, 2, 2}));
}

TEST(StandardWeightVector, OutOfRange) {
  EXPECT_THROW(standard_weight_vector(3, 0), Error);
  EXPECT_THROW(standard_weight_vector(3, 3), Error);
  try {
    standard_weight_vector(4, 7);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(StandardWeightVector, SumZeroSingleGap) {
  for (std::size_t r = 2; r <= 9; ++r)
    for (std::size_t i = 1; i < r; ++i) {
      auto v = standard_weight_vector(r, i);
      EXPECT_EQ(std::accumulate(v.begin(), v.end(), Rational(0)), 0);
      auto [ranks, alphas] = filtration_of_weight_vector(v);
      ASSERT_EQ(ranks.size(), 1u);
      EXPECT_EQ(ranks[0], i);
      EXPECT_EQ(alphas[0], 1);  // gap r divided by r
    }
}

TEST(WeightedFlagOf, Examples) {
  auto f = weighted_flag_of(OneParamSubgroup({-2, 1, 1}));
  EXPECT_EQ(f.dims, (std::vector<std::size_t>{1}));
  EXPECT_EQ(f.alphas, ints({1}));
  EXPECT_EQ(f.basis_order, (std::vector<std::size_t>{0, 1, 2}));

  f = weighted_flag_of(OneParamSubgroup({-1, -1, 2}));
  EXPECT_EQ(f.dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(f.alphas, ints({1}));

  f = weighted_flag_of(OneParamSubgroup({-1, 0, 1}));
  EXPECT_EQ(f.dims, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(f.alphas, (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
}

TEST(WeightedFlagOf, StableTieOrder) {
  auto f = weighted_flag_of(OneParamSubgroup({1, -1, 1, -1}));
  EXPECT_EQ(f.basis_order, (std::vector<std::size_t>{1, 3, 0, 2}));
  EXPECT_EQ(f.dims, (std::vector<std::size_t>{2}));
  EXPECT_EQ(f.alphas, (std::vector<Rational>{Rational(1, 2)}));
}

TEST(WeightedFlagOf, Errors) {
  EXPECT_THROW(weighted_flag_of(OneParamSubgroup({0, 0, 0})), Error);
  EXPECT_THROW(OneParamSubgroup({1, 1}), Error);
}

TEST(WeightVectorOfFiltration, Examples) {
  EXPECT_EQ(weight_vector_of_filtration({1}, {Rational(1)}, 3), ints({-2, 1, 1}));
  EXPECT_EQ(weight_vector_of_filtration({1, 2}, {Rational(1, 3), Rational(1, 3)}, 3), ints({-1, 0, 1}));
  EXPECT_EQ(weight_vector_of_filtration({1}, {Rational(2)}, 2), ints({-2, 2}));
}

TEST(WeightVectorOfFiltration, Malformed) {
  EXPECT_THROW(weight_vector_of_filtration({2, 1}, {Rational(1), Rational(1)}, 3), Error);
  EXPECT_THROW(weight_vector_of_filtration({1, 1}, {Rational(1), Rational(1)}, 3), Error);
  EXPECT_THROW(weight_vector_of_filtration({1}, {Rational(0)}, 3), Error);
  EXPECT_THROW(weight_vector_of_filtration({3}, {Rational(1)}, 3), Error);
}

TEST(WeightVectorOfFiltration, MatchesEntrywiseFormula) {
  Rng rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 7));
    auto t = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<std::int64_t>(r) - 1));
    auto ranks = testing::random_ranks(rng, r, t);
    std::vector<Rational> alphas;
    for (std::size_t j = 0; j < t; ++j) alphas.push_back(testing::random_positive(rng));
    EXPECT_EQ(weight_vector_of_filtration(ranks, alphas, r), testing::direct_weight_vector(ranks, alphas, r));
  }
}

// weighted_flag_of on an integral multiple of the weight vector recovers
// the ranks and α's up to the common multiple.
TEST(WeightedFlagOf, RoundTripThroughIntegralSubgroup) {
  Rng rng(22);
  for (int iter = 0; iter < 300; ++iter) {
    auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 6));
    auto t = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<std::int64_t>(r) - 1));
    auto ranks = testing::random_ranks(rng, r, t);
    std::vector<Rational> alphas;
    Integer c = 1;
    for (std::size_t j = 0; j < t; ++j) {
      alphas.push_back(testing::random_positive(rng));
      c = boost::multiprecision::lcm(c, denominator_of(alphas.back()));
    }
    auto v = weight_vector_of_filtration(ranks, alphas, r);
    std::vector<std::int64_t> w;
    for (const auto& x : v) {
      Rational scaled = x * Rational(c);
      ASSERT_TRUE(is_integral(scaled));
      w.push_back(numerator_of(scaled).convert_to<std::int64_t>());
    }
    auto flag = weighted_flag_of(OneParamSubgroup(w));
    EXPECT_EQ(flag.dims, ranks);
    ASSERT_EQ(flag.alphas.size(), alphas.size());
    for (std::size_t j = 0; j < t; ++j) EXPECT_EQ(flag.alphas[j], alphas[j] * Rational(c));
  }
}

TEST(Parabolic, Examples) {
  OneParamSubgroup l({-1, 1});
  EXPECT_TRUE(parabolic_member(l, Matrix<Rational>::identity(2)));
  EXPECT_FALSE(parabolic_member(l, identity_plus(2, 1, 0, 1)));
  EXPECT_TRUE(parabolic_member(l, identity_plus(2, 0, 1, 1)));
  EXPECT_THROW(parabolic_member(l, Matrix<Rational>(2, 2)), Error);
}

TEST(UnipotentRadical, Examples) {
  OneParamSubgroup l({-1, 1});
  EXPECT_TRUE(unipotent_radical_member(l, Matrix<Rational>::identity(2)));
  Matrix<Rational> d = Matrix<Rational>::identity(2);
  d(0, 0) = 2;
  d(1, 1) = Rational(1, 2);
  EXPECT_FALSE(unipotent_radical_member(l, d));
  EXPECT_TRUE(parabolic_member(l, d));
  EXPECT_TRUE(unipotent_radical_member(l, identity_plus(2, 0, 1, 1)));
}

TEST(Parabolic, NegationGivesOppositeParabolic) {
  OneParamSubgroup l({-1, 1});
  EXPECT_TRUE(parabolic_member(negate(l), identity_plus(2, 1, 0, 1)));
  EXPECT_FALSE(parabolic_member(negate(l), identity_plus(2, 0, 1, 1)));
}

Matrix<Rational> random_invertible(Rng& rng, std::size_t r, const OneParamSubgroup& l, bool parabolic) {
  while (true) {
    Matrix<Rational> g(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) {
        if (parabolic && l[a] > l[b]) continue;
        g(a, b) = testing::uniform(rng, -2, 2);
      }
    if (determinant(g) != 0) return g;
  }
}

Matrix<Rational> inverse(const Matrix<Rational>& g) {
  const std::size_t r = g.rows();
  Matrix<Rational> aug(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = g(i, j);
    aug(i, r + i) = 1;
  }
  row_reduce(aug);
  Matrix<Rational> inv(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) inv(i, j) = aug(i, r + j);
  return inv;
}

TEST(Parabolic, GroupProperty) {
  Rng rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    auto r = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    std::vector<std::int64_t> w(r);
    std::int64_t sum = 0;
    for (std::size_t a = 0; a + 1 < r; ++a) sum += (w[a] = testing::uniform(rng, -2, 2));
    w[r - 1] = -sum;
    OneParamSubgroup l(w);
    auto g = random_invertible(rng, r, l, true), h = random_invertible(rng, r, l, true);
    ASSERT_TRUE(parabolic_member(l, g));
    EXPECT_TRUE(parabolic_member(l, g * h));
    EXPECT_TRUE(parabolic_member(l, inverse(g)));
    auto any = random_invertible(rng, r, l, false);
    if (unipotent_radical_member(l, any)) EXPECT_TRUE(parabolic_member(l, any));
    if (unipotent_radical_member(l, g)) EXPECT_TRUE(parabolic_member(l, g));
  }
}

TEST(Primitive, DividesByGcd) {
  EXPECT_EQ(primitive(OneParamSubgroup({-3, 3})), OneParamSubgroup({-1, 1}));
  EXPECT_EQ(primitive(OneParamSubgroup({-4, 2, 2})), OneParamSubgroup({-2, 1, 1}));
}

}  // namespace
}  // namespace gitss
