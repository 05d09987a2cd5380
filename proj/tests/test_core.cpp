#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oddcover/constructions.hpp"
#include "oddcover/core.hpp"
#include "oracles.hpp"

using namespace oddcover;

TEST(Block, CanonicalFormOrdersPartsByMinimum) {
  EXPECT_EQ(canonicalize(std::vector<Part>{{3}, {1, 2}}).parts(), (std::vector<Part>{{1, 2}, {3}}));
  EXPECT_EQ(canonicalize(std::vector<Part>{{2, 1}, {3}}).parts(), (std::vector<Part>{{1, 2}, {3}}));
}

TEST(Block, RejectsEmptyOrOverlappingParts) {
  EXPECT_THROW(Block({{1}, {}}), ValidationError);
  EXPECT_THROW(Block({{1, 2}, {2, 3}}), ValidationError);
  EXPECT_THROW(Block({{1, 2}}), ValidationError);
}

TEST(Block, CanonicalizeIsIdempotent) {
  std::mt19937 rng(7);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const std::size_t r = 2 + rng() % (n - 1);
    auto b = oracle::random_block(n, r, rng);
    // Scramble the raw parts before canonicalizing.
    auto parts = b.parts();
    std::shuffle(parts.begin(), parts.end(), rng);
    for (auto& p : parts) std::shuffle(p.begin(), p.end(), rng);
    const auto once = canonicalize(parts);
    EXPECT_EQ(once, b);
    EXPECT_EQ(canonicalize(once), once);
  }
}

TEST(ContainsRset, Examples) {
  EXPECT_TRUE(contains_rset(Block({{1, 2}, {3}}), RSet{1, 3}));
  EXPECT_FALSE(contains_rset(Block({{1, 2}, {3}}), RSet{1, 2}));
  EXPECT_TRUE(contains_rset(Block({{1, 4}, {2, 3}, {5, 0}}), RSet{0, 1, 2}));
  EXPECT_THROW(contains_rset(Block({{1, 2}, {3}}), RSet{1, 2, 3}), ValidationError);
}

TEST(ContainsRset, MembershipDichotomyExhaustive) {
  std::mt19937 rng(11);
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t r = 2; r <= std::min<std::size_t>(n, 4); ++r)
      for (int t = 0; t < 5; ++t) {
        const auto b = oracle::random_block(n, r, rng);
        for (const auto& s : oracle::all_rsets(n, r)) {
          // Vertex -> part map restricted to s is a bijection onto the parts.
          std::vector<int> seen(r, 0);
          bool bijective = true;
          for (auto v : s) {
            const auto p = b.part_of(v);
            if (!p || seen[*p]++) bijective = false;
          }
          EXPECT_EQ(contains_rset(b, RSet(s)), bijective);
        }
      }
}

TEST(Colex, RankMatchesEnumerationOrder) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      std::uint64_t expect = 0;
      for_each_rset(n, r, [&](const std::vector<Vertex>& s) {
        EXPECT_EQ(colex_rank(s), expect);
        EXPECT_EQ(colex_unrank(expect, r, n), RSet(s));
        ++expect;
      });
      EXPECT_EQ(expect, binomial(n, r));
    }
  // Colex order sorts by the largest element first.
  EXPECT_EQ(colex_rank(RSet{0, 1}), 0U);
  EXPECT_EQ(colex_rank(RSet{0, 2}), 1U);
  EXPECT_EQ(colex_rank(RSet{1, 2}), 2U);
  EXPECT_EQ(colex_rank(RSet{0, 3}), 3U);
}

TEST(IncidenceVector, Examples) {
  const auto v = incidence_vector(Block({{0}, {1}}), 3);
  ASSERT_EQ(v.size(), 3U);
  EXPECT_TRUE(v.test(colex_rank(RSet{0, 1})));
  EXPECT_FALSE(v.test(colex_rank(RSet{0, 2})));
  EXPECT_FALSE(v.test(colex_rank(RSet{1, 2})));

  const auto single = incidence_vector(Block({{0}, {1}, {2}}), 3);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_TRUE(single.test(0));

  EXPECT_EQ(incidence_vector(Block({{0, 3}, {1, 2}, {4, 5}}), 6).popcount(), 8U);
  EXPECT_THROW(incidence_vector(Block({{0, 3}, {1, 2}, {4, 5}}), 5), ValidationError);
}

TEST(IncidenceVector, PopcountIsProductOfPartSizes) {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng() % 12;
    const std::size_t r = 2 + rng() % 3;
    const auto b = oracle::random_block(n, r, rng);
    EXPECT_EQ(incidence_vector(b, n).popcount(), b.edge_count());
  }
}

TEST(CoverParity, Examples) {
  EXPECT_TRUE(cover_parity(Cover(4, 3)).none());
  EXPECT_EQ(cover_parity(Cover(4, 3, {Block({{0}, {1}, {2}})})).popcount(), 1U);
  EXPECT_TRUE(cover_parity(circle_cover(4)).all());
}

TEST(CoverParity, LinearityAndCancellation) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 4 + rng() % 6;
    const std::size_t r = 2 + rng() % 3;
    const auto f1 = oracle::random_cover(n, r, 1 + rng() % 5, rng);
    const auto f2 = oracle::random_cover(n, r, 1 + rng() % 5, rng);
    Cover both(n, r, f1.blocks());
    for (const auto& b : f2.blocks()) both.add(b);
    EXPECT_EQ(cover_parity(both), cover_parity(f1) ^ cover_parity(f2));

    const auto b = oracle::random_block(n, r, rng);
    EXPECT_TRUE(cover_parity(Cover(n, r, {b, b})).none());
  }
}

TEST(IsOddCover, AgreesWithCountingOracle) {
  std::mt19937 rng(13);
  int odd = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t n = r + rng() % (9 - r);
    const auto cover = oracle::random_cover(n, r, 1 + rng() % 6, rng);
    const auto res = is_odd_cover(cover);
    const auto naive = oracle::naive_even_rset(cover);
    EXPECT_EQ(res.odd, !naive.has_value());
    if (!res.odd) {
      ASSERT_TRUE(res.witness.has_value());
      EXPECT_EQ(oracle::coverage_count(cover, std::vector<Vertex>(res.witness->elements().begin(),
                                                                  res.witness->elements().end())) % 2,
                0U);
    }
    odd += res.odd;
  }
  // Tiny ground sets make some random families odd covers.
  EXPECT_GT(odd, 0);
}

TEST(IsOddCover, DeletingACircleBlockGivesAWitness) {
  const auto full = circle_cover(6);
  ASSERT_TRUE(is_odd_cover(full));
  Cover cut(6, 3, {full[0], full[1]});
  const auto res = is_odd_cover(cut);
  ASSERT_FALSE(res);
  ASSERT_TRUE(res.witness);
  EXPECT_EQ(res.witness->size(), 3U);
}

TEST(Cover, RejectsForeignBlocks) {
  EXPECT_THROW(Cover(3, 2, {Block({{0}, {3}})}), ValidationError);
  EXPECT_THROW(Cover(4, 3, {Block({{0}, {1}})}), ValidationError);
}
