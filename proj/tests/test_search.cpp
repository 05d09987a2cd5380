#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "oddcover/core.hpp"
#include "oddcover/search.hpp"
#include "oracles.hpp"

using namespace oddcover;

namespace {

/// Lex-first m-subset XOR-ing to target, by scanning every subset bitmask.
std::optional<Witness> bitmask_solve(const CandidateUniverse& u, const ParityVector& target, std::size_t m) {
  std::optional<Witness> best;
  for (std::uint32_t mask = 0; mask < (1U << u.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    ParityVector acc(u.n, u.r);
    Witness w;
    for (std::size_t i = 0; i < u.size(); ++i)
      if ((mask >> i) & 1U) {
        acc ^= u.vectors[i];
        w.push_back(i);
      }
    if (acc == target && (!best || w < *best)) best = w;
  }
  return best;
}

}  // namespace

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling2(0, 0), 1U);
  EXPECT_EQ(stirling2(4, 2), 7U);
  EXPECT_EQ(stirling2(5, 3), 25U);
  EXPECT_EQ(stirling2(7, 4), 350U);
  EXPECT_EQ(stirling2(3, 4), 0U);
}

TEST(EnumerateCandidates, Counts) {
  EXPECT_EQ(enumerate_candidates(3, 2).size(), 6U);
  EXPECT_EQ(enumerate_candidates(5, 3).size(), 65U);
  EXPECT_EQ(enumerate_candidates(5, 4).size(), 15U);
  EXPECT_EQ(candidate_count(7, 2), 966U);
}

TEST(EnumerateCandidates, MatchesLabellingOracle) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t r = 2; r <= std::min<std::size_t>(n, 4); ++r) {
      const auto u = enumerate_candidates(n, r);
      EXPECT_EQ(u.blocks, oracle::all_blocks(n, r)) << "n=" << n << " r=" << r;
      EXPECT_EQ(u.size(), candidate_count(n, r));
      EXPECT_TRUE(std::is_sorted(u.blocks.begin(), u.blocks.end()));
      for (std::size_t i = 0; i < u.size(); ++i) EXPECT_EQ(u.vectors[i], incidence_vector(u.blocks[i], n));
    }
}

TEST(EnumerateCandidates, CapAndPreconditions) {
  EXPECT_THROW(enumerate_candidates(7, 2, 100), ResourceLimit);
  EXPECT_THROW(enumerate_candidates(3, 4), ValidationError);
}

TEST(EnumerateCandidates, SharedFootprintsAtSmallN) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t r = 2; r <= std::min<std::size_t>(n, 4); ++r) {
      const auto u = enumerate_candidates(n, r);
      std::set<std::vector<std::uint64_t>> seen;
      std::size_t collisions = 0;
      for (const auto& v : u.vectors)
        if (!seen.insert({v.words().begin(), v.words().end()}).second) ++collisions;
      // Empirically no two canonical blocks share a footprint at these sizes.
      EXPECT_EQ(collisions, 0U) << "n=" << n << " r=" << r;
    }
}

TEST(MitmSolve, AgreesWithNaiveOnSmallUniverses) {
  std::mt19937 rng(42);
  std::vector<CandidateUniverse> universes;
  universes.push_back(enumerate_candidates(3, 2));
  universes.push_back(enumerate_candidates(4, 3));
  universes.push_back(enumerate_candidates(4, 4));
  // Random sub-universes of at most 12 blocks.
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t n = r + 1 + rng() % 2;
    auto all = enumerate_candidates(n, r).blocks;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 6 + rng() % 7));
    universes.push_back(make_universe(n, r, all));
  }
  for (const auto& u : universes) {
    ASSERT_LE(u.size(), 12U);
    const std::size_t bits = binomial(u.n, u.r);
    std::vector<ParityVector> targets{ParityVector(u.n, u.r), ParityVector::ones(u.n, u.r)};
    for (int t = 0; t < 6; ++t) {
      ParityVector v(u.n, u.r);
      for (std::size_t i = 0; i < bits; ++i)
        if (rng() % 2) v.set(i);
      targets.push_back(v);
    }
    // Targets that are guaranteed reachable: XOR of a few blocks.
    for (int t = 0; t < 4; ++t) {
      ParityVector v(u.n, u.r);
      for (std::size_t i = 0; i < u.size(); ++i)
        if (rng() % 3 == 0) v ^= u.vectors[i];
      targets.push_back(v);
    }
    for (const auto& target : targets)
      for (std::size_t m = 2; m <= u.size(); ++m) {
        const auto expect = bitmask_solve(u, target, m);
        EXPECT_EQ(mitm_solve(u, target, m), expect) << "m=" << m;
        EXPECT_EQ(naive_solve(u, target, m), expect) << "m=" << m;
        EXPECT_EQ(pruned_dfs_solve(u, target, m), expect) << "m=" << m;
      }
  }
}

TEST(MitmSolve, ZeroTargetWithTwoBlocksIsAbsent) {
  const auto u = enumerate_candidates(5, 3);
  EXPECT_FALSE(mitm_solve(u, ParityVector(5, 3), 2).has_value());
}

TEST(MitmSolve, FindsGraphCovers) {
  const auto u5 = enumerate_candidates(5, 2);
  const auto w5 = mitm_solve(u5, ParityVector::ones(5, 2), 3);
  ASSERT_TRUE(w5);
  EXPECT_EQ(w5, naive_solve(u5, ParityVector::ones(5, 2), 3));

  const auto u7 = enumerate_candidates(7, 2);
  const auto w7 = mitm_solve(u7, ParityVector::ones(7, 2), 4);
  ASSERT_TRUE(w7);
  std::vector<Block> blocks;
  for (auto i : *w7) blocks.push_back(u7.blocks[i]);
  EXPECT_TRUE(oracle::naive_is_odd_cover(Cover(7, 2, blocks)));
}

TEST(MitmSolve, GuardsAndPreconditions) {
  const auto u = enumerate_candidates(5, 3);
  EXPECT_THROW(mitm_solve(u, ParityVector::ones(5, 3), 1), ValidationError);
  EXPECT_THROW(mitm_solve(u, ParityVector::ones(5, 3), 4, 10), ResourceLimit);
  EXPECT_THROW(pruned_dfs_solve(u, ParityVector::ones(5, 3), 4, 5), ResourceLimit);
  // Popcount bound prunes at the root: no nodes are charged.
  EXPECT_FALSE(pruned_dfs_solve(u, ParityVector::ones(5, 3), 2, 0));
}

TEST(MinOddCover, KnownSmallValues) {
  struct Case {
    std::size_t n, r, max, expect;
  };
  for (const auto& c : {Case{3, 2, 3, 2}, Case{5, 2, 4, 3}, Case{4, 3, 3, 2}, Case{4, 2, 4, 3},
                        Case{5, 3, 3, 3}, Case{5, 4, 4, 3}}) {
    const auto res = min_odd_cover(c.n, c.r, c.max);
    ASSERT_EQ(res.status, SearchStatus::found) << c.n << "," << c.r;
    EXPECT_EQ(res.cover->size(), c.expect) << c.n << "," << c.r;
    EXPECT_EQ(res.proven_above, c.expect - 1);
    EXPECT_TRUE(oracle::naive_is_odd_cover(*res.cover));
  }
}

TEST(MinOddCover, AgreesWithIndependentEnumeration) {
  // Oracle: blocks from the labelling enumeration, subsets by plain recursion.
  struct Case {
    std::size_t n, r;
  };
  for (const auto& c : {Case{3, 2}, Case{4, 2}, Case{4, 3}, Case{5, 3}, Case{5, 4}}) {
    const auto blocks = oracle::all_blocks(c.n, c.r);
    const auto expect = oracle::naive_min_cover(blocks, c.n, c.r, 4);
    const auto res = min_odd_cover(c.n, c.r, 4);
    ASSERT_TRUE(expect.has_value());
    ASSERT_EQ(res.status, SearchStatus::found);
    EXPECT_EQ(res.cover->size(), *expect) << c.n << "," << c.r;
  }
}

TEST(MinOddCover, AbsentAndInconclusive) {
  const auto absent = min_odd_cover(5, 2, 2);
  EXPECT_EQ(absent.status, SearchStatus::absent);
  EXPECT_EQ(absent.proven_above, 2U);
  EXPECT_FALSE(absent.cover.has_value());

  SearchOptions tight;
  tight.candidate_cap = 10;
  const auto capped = min_odd_cover(6, 3, 3, tight);
  EXPECT_EQ(capped.status, SearchStatus::inconclusive);
  EXPECT_FALSE(capped.reason.empty());

  EXPECT_THROW(min_odd_cover(3, 4, 1), ValidationError);
  EXPECT_THROW(min_odd_cover(4, 3, 0), ValidationError);
}

TEST(MinOddCover, DeterministicWitness) {
  const auto a = min_odd_cover(5, 3, 3);
  const auto b = min_odd_cover(5, 3, 3);
  ASSERT_TRUE(a.cover && b.cover);
  EXPECT_EQ(*a.cover, *b.cover);
}
