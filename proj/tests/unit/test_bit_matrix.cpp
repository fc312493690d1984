#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stix/bit_matrix.hpp"
#include "stix/digraph.hpp"
#include "stix/random.hpp"

using namespace stix;

TEST(BoolMatrix, ZeroOrderRejected) { EXPECT_THROW(BoolMatrix(0), std::invalid_argument); }

TEST(BoolMatrix, FromRowsRoundTrip) {
  const auto a = BoolMatrix::from_rows({"010", "001", "100"});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_TRUE(a.get(0, 1));
  EXPECT_FALSE(a.get(0, 0));
  EXPECT_EQ(a.count_ones(), 3u);
  EXPECT_EQ(a.to_strings(), (std::vector<std::string>{"010", "001", "100"}));
  EXPECT_THROW(BoolMatrix::from_rows({"01", "1"}), std::invalid_argument);
  EXPECT_THROW(BoolMatrix::from_rows({"02", "10"}), std::invalid_argument);
}

TEST(BoolMatrix, WideRowsSpanWords) {
  BoolMatrix a(130);
  EXPECT_EQ(a.words_per_row(), 3u);
  a.set(129, 129);
  a.set(0, 64);
  EXPECT_TRUE(a.get(129, 129));
  EXPECT_TRUE(a.get(0, 64));
  EXPECT_EQ(a.count_ones(), 2u);
  a.set(0, 64, false);
  EXPECT_EQ(a.count_ones(), 1u);
}

TEST(BoolProduct, MatchesIntegerProductAcrossWordBoundary) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 100u}) {
    const auto a = random_matrix(n, 0.1, rng);
    const auto b = random_matrix(n, 0.1, rng);
    const auto want = oracle::multiply(oracle::dense(a), oracle::dense(b));
    const auto got = bool_product(a, b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(got.get(i, j), want[i][j] > 0) << n;
  }
}

TEST(BoolProduct, IdentityIsNeutral) {
  std::mt19937_64 rng(11);
  const auto a = random_matrix(70, 0.3, rng);
  EXPECT_EQ(bool_product(a, BoolMatrix::identity(70)), a);
  EXPECT_EQ(bool_product(BoolMatrix::identity(70), a), a);
  EXPECT_THROW(bool_product(a, BoolMatrix(3)), DimensionMismatch);
}

TEST(CappedProduct, SaturatesAtTwo) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto a = random_matrix(n, 0.5, rng);
    const auto b = random_matrix(n, 0.5, rng);
    const auto want = oracle::multiply(oracle::dense(a), oracle::dense(b));
    const auto got = capped_product(a, b);
    const auto via_planes = capped_product(CappedMatrix(a), CappedMatrix(b));
    EXPECT_EQ(got, via_planes);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(got.get(i, j), std::min<std::int64_t>(2, want[i][j]));
  }
}

TEST(CappedProduct, TwoIsAbsorbing) {
  // J_2 squared is 2J; any further product stays at 2.
  const auto j2 = BoolMatrix::all_ones(2);
  const auto sq = capped_product(j2, j2);
  EXPECT_TRUE(sq.has_overflow());
  const auto cube = capped_product(sq, CappedMatrix(j2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(cube.get(i, j), 2);
  EXPECT_EQ(sq.first_overflow(), std::make_optional(std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_THROW(sq.to_bool(), std::logic_error);
}

TEST(CappedMatrix, FirstOverflowIsRowMajorSmallest) {
  CappedMatrix m(4);
  m.set(3, 0, 2);
  m.set(1, 2, 2);
  m.set(1, 3, 2);
  EXPECT_EQ(m.first_overflow(), std::make_optional(std::pair<std::size_t, std::size_t>{1, 2}));
  m.set(0, 0, 1);
  EXPECT_EQ(m.get(0, 0), 1);
  EXPECT_FALSE(CappedMatrix(4).first_overflow());
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
  const Permutation p({2, 0, 1});
  EXPECT_EQ(p.inverse()(p(1)), 1u);
  EXPECT_EQ(Permutation::cyclic_shift(5, 2)(4), 1u);
}

TEST(Permutation, PermuteCommutesWithProduct) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 7;
    const auto a = random_matrix(n, 0.4, rng);
    const auto b = random_matrix(n, 0.4, rng);
    const auto p = random_permutation(n, rng);
    EXPECT_EQ(permute(bool_product(a, b), p), bool_product(permute(a, p), permute(b, p)));
    EXPECT_EQ(permute(permute(a, p), p.inverse()), a);
  }
}

TEST(Permutation, PermuteConvention) {
  const auto a = BoolMatrix::from_rows({"010", "000", "000"});
  const auto b = permute(a, Permutation({1, 0, 2}));  // b(i,j) = a(p(i), p(j))
  EXPECT_TRUE(b.get(1, 0));
  EXPECT_EQ(b.count_ones(), 1u);
}

TEST(CountMatrix, ExactPowersMatchOracle) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto a = random_matrix(n, 0.5, rng);
    auto want = oracle::dense(a);
    for (std::size_t k = 2; k <= 6; ++k) {
      want = oracle::multiply(want, oracle::dense(a));
      const auto got = exact_power(a, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ASSERT_EQ(got(i, j), BigInt(want[i][j]));
          ASSERT_EQ(exact_walk_count(a, k, i, j), BigInt(want[i][j]));
        }
    }
  }
  EXPECT_EQ(exact_power(BoolMatrix::all_ones(3), 0), CountMatrix(BoolMatrix::identity(3)));
}

TEST(CountMatrix, NoOverflowOnLongWalks) {
  // J_4^40 = 4^39 J, far past 64 bits.
  const auto p = exact_power(BoolMatrix::all_ones(4), 40);
  BigInt expected = 1;
  for (int i = 0; i < 39; ++i) expected *= 4;
  EXPECT_EQ(p(2, 3), expected);
  EXPECT_FALSE(p.is_zero_one());
}

TEST(Transpose, Involution) {
  std::mt19937_64 rng(2);
  const auto a = random_matrix(67, 0.2, rng);
  EXPECT_EQ(transpose(transpose(a)), a);
  const auto t = transpose(a);
  for (std::size_t i = 0; i < 67; ++i)
    for (std::size_t j = 0; j < 67; ++j) ASSERT_EQ(a.get(i, j), t.get(j, i));
}

TEST(Condensation, BlocksAreUpperTriangular) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 10;
    const auto a = random_matrix(n, 0.2, rng);
    const auto blocks = condensation(a);
    const auto reach = oracle::reachability(a);
    std::vector<std::size_t> block_of(n);
    std::size_t covered = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      covered += blocks[b].vertices.size();
      for (auto v : blocks[b].vertices) block_of[v] = b;
    }
    ASSERT_EQ(covered, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool same = reach[i][j] && reach[j][i];
        ASSERT_EQ(block_of[i] == block_of[j], same);
        if (a.get(i, j)) {
          ASSERT_LE(block_of[i], block_of[j]);
        }
      }
  }
}

TEST(Condensation, CycleFlags) {
  const auto blocks = condensation(BoolMatrix::from_rows({"100", "001", "010"}));
  ASSERT_EQ(blocks.size(), 2u);
  for (const auto& b : blocks) EXPECT_TRUE(b.is_single_cycle);  // loop and a 2-cycle
  EXPECT_FALSE(condensation(BoolMatrix(1))[0].is_single_cycle);
  EXPECT_FALSE(condensation(BoolMatrix::all_ones(2))[0].is_single_cycle);
}

TEST(Irreducible, AgreesWithReachability) {
  EXPECT_FALSE(is_irreducible(BoolMatrix(1)));
  EXPECT_TRUE(is_irreducible(BoolMatrix::all_ones(1)));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_matrix(1 + t % 7, 0.35, rng);
    ASSERT_EQ(is_irreducible(a), oracle::strongly_connected(a));
  }
  for (int t = 0; t < 50; ++t) EXPECT_TRUE(is_irreducible(random_irreducible(2 + t % 9, rng)));
}
