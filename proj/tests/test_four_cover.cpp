#include <gtest/gtest.h>

#include <cmath>

#include "oddcover/four_cover.hpp"
#include "oddcover/search.hpp"
#include "oracles.hpp"

using namespace oddcover;

TEST(FourCover, BaseCases) {
  EXPECT_EQ(recursive_four_cover(4).blocks(), (std::vector<Block>{Block({{0}, {1}, {2}, {3}})}));
  EXPECT_EQ(four_base_cover(5).size(), 3U);
  EXPECT_EQ(four_base_cover(6).size(), 6U);
  for (std::size_t n = 4; n <= 6; ++n) EXPECT_TRUE(oracle::naive_is_odd_cover(four_base_cover(n)));
  EXPECT_THROW(recursive_four_cover(3), ValidationError);
  EXPECT_THROW(four_base_cover(7), ValidationError);
}

TEST(FourCover, BaseTablesAreMinimal) {
  // Stored base covers must match what exhaustive search finds.
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto res = min_odd_cover(n, 4, four_base_cover(n).size());
    ASSERT_EQ(res.status, SearchStatus::found) << n;
    EXPECT_EQ(res.cover->size(), four_base_cover(n).size()) << n;
  }
}

TEST(FourCover, VerifiesAndMatchesRecursion) {
  for (std::size_t n = 4; n <= 16; ++n) {
    const auto c = recursive_four_cover(n);
    EXPECT_EQ(c.n(), n);
    EXPECT_EQ(c.r(), 4U);
    EXPECT_TRUE(is_odd_cover(c)) << n;
    EXPECT_EQ(c.size(), recursive_four_size(n)) << n;
  }
  EXPECT_TRUE(oracle::naive_is_odd_cover(recursive_four_cover(8)));
}

TEST(FourCover, SixteenWithinEnvelope) {
  const auto c = recursive_four_cover(16);
  // 2 s(8) + 2 |b_3(8)| + |b(8)|^2 with s(8) = 2 s(4) + 2 |b_3(4)| + |b(4)|^2 = 2 + 4 + 9.
  EXPECT_EQ(recursive_four_size(8), 15U);
  EXPECT_EQ(c.size(), 2 * 15U + 2 * 4U + 4U * 4U);
  EXPECT_LE(static_cast<double>(c.size()), 16.0 * 16.0 / 8.0 + 10.0 * 16.0 * std::log2(16.0));
}
