#pragma once

// Exact minimum odd covers for small (n, r) by exhaustive subset-XOR search
// over every complete r-partite block on 0..n-1.
//
// Only sets of blocks are searched: a repeated block cancels over GF(2), so a
// minimal multiset never repeats.  Witnesses are the lexicographically first
// index tuple (i_1 < ... < i_m) over the canonical candidate order, whichever
// strategy finds them.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "oddcover/core.hpp"

namespace oddcover {

/// Raised when a search would exceed a configured resource cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCandidateCap = 1'000'000;

/// Stirling number of the second kind S(s, k), saturating at uint64 max.
inline std::uint64_t stirling2(std::size_t s, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= s; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      // S(i, j) = j S(i-1, j) + S(i-1, j-1)
      const auto a = row[j];
      const auto b = row[j - 1];
      row[j] = (a > (kMax - b) / j) ? kMax : a * j + b;
    }
    row[0] = 0;
  }
  return row[k];
}

/// Number of complete r-partite r-graphs on subsets of 0..n-1:
/// sum over s of C(n, s) S(s, r).  Saturates.
inline std::uint64_t candidate_count(std::size_t n, std::size_t r) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t s = r; s <= n; ++s) {
    const auto c = binomial(n, s);
    const auto st = stirling2(s, r);
    if (st != 0 && c > kMax / st) return kMax;
    const auto term = c * st;
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

/// Every canonical block on 0..n-1 with its footprint.
struct CandidateUniverse {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Block> blocks;          ///< sorted, pairwise distinct
  std::vector<ParityVector> vectors;  ///< vectors[i] = incidence_vector(blocks[i], n)

  [[nodiscard]] std::size_t size() const noexcept { return blocks.size(); }
};

/// Builds a universe from an explicit block list (sorted and deduplicated).
inline CandidateUniverse make_universe(std::size_t n, std::size_t r, std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  CandidateUniverse u{n, r, std::move(blocks), {}};
  u.vectors.reserve(u.blocks.size());
  for (const auto& b : u.blocks) {
    if (b.uniformity() != r) throw ValidationError("make_universe: uniformity mismatch");
    u.vectors.push_back(incidence_vector(b, n));
  }
  return u;
}

/// All complete r-partite r-graphs on subsets of 0..n-1, in canonical order.
/// Throws ResourceLimit when the universe would exceed cap blocks.
inline CandidateUniverse enumerate_candidates(std::size_t n, std::size_t r,
                                              std::uint64_t cap = kDefaultCandidateCap) {
  if (r < 2 || n < r) throw ValidationError("enumerate_candidates: need n >= r >= 2");
  const auto expected = candidate_count(n, r);
  if (expected > cap)
    throw ResourceLimit("enumerate_candidates: " + std::to_string(expected) +
                        " candidates exceed the cap of " + std::to_string(cap));
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(expected));
  std::vector<Vertex> support;
  std::vector<std::size_t> label;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < r) continue;
    support.clear();
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) support.push_back(static_cast<Vertex>(v));
    const std::size_t s = support.size();
    // Restricted growth strings with exactly r distinct labels.
    label.assign(s, 0);
    std::vector<std::size_t> prefix_max(s, 0);
    while (true) {
      if (prefix_max[s - 1] + 1 == r) {
        std::vector<Part> parts(r);
        for (std::size_t i = 0; i < s; ++i) parts[label[i]].push_back(support[i]);
        blocks.emplace_back(std::move(parts));
      }
      std::size_t i = s - 1;
      while (i > 0 && (label[i] > prefix_max[i - 1] || label[i] + 1 >= r)) --i;
      if (i == 0) break;
      ++label[i];
      prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
      for (std::size_t j = i + 1; j < s; ++j) {
        label[j] = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }
  return make_universe(n, r, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Subset-XOR solvers
// ---------------------------------------------------------------------------

using Witness = std::vector<std::size_t>;  ///< strictly increasing candidate indices

/// Lexicographic enumeration of m-subsets with incremental XOR.
inline std::optional<Witness> naive_solve(const CandidateUniverse& u, const ParityVector& target,
                                          std::size_t m) {
  if (m == 0) return target.none() ? std::optional<Witness>(Witness{}) : std::nullopt;
  if (m > u.size()) return std::nullopt;
  Witness pick(m);
  std::vector<ParityVector> acc(m + 1, ParityVector(u.n, u.r));
  acc[0] = target;
  std::size_t depth = 0;
  pick[0] = 0;
  while (true) {
    if (pick[depth] + (m - depth) > u.size()) {
      if (depth == 0) return std::nullopt;
      ++pick[--depth];
      continue;
    }
    acc[depth + 1] = acc[depth] ^ u.vectors[pick[depth]];
    if (depth + 1 == m) {
      if (acc[m].none()) return pick;
      ++pick[depth];
    } else {
      pick[depth + 1] = pick[depth] + 1;
      ++depth;
    }
  }
}

namespace detail {

/// Calls fn(tuple, xor) for every h-subset of [begin, end) in lex order.
template <typename Fn>
void for_each_subset_xor(const CandidateUniverse& u, std::size_t h, std::size_t begin,
                         std::size_t end, Fn&& fn) {
  if (h == 0) {
    fn(Witness{}, ParityVector(u.n, u.r));
    return;
  }
  if (end < begin || end - begin < h) return;
  Witness pick(h);
  std::vector<ParityVector> acc(h + 1, ParityVector(u.n, u.r));
  std::size_t depth = 0;
  pick[0] = begin;
  while (true) {
    if (pick[depth] + (h - depth) > end) {
      if (depth == 0) return;
      ++pick[--depth];
      continue;
    }
    acc[depth + 1] = acc[depth] ^ u.vectors[pick[depth]];
    if (depth + 1 == h) {
      if (!fn(static_cast<const Witness&>(pick), static_cast<const ParityVector&>(acc[h]))) return;
      ++pick[depth];
    } else {
      pick[depth + 1] = pick[depth] + 1;
      ++depth;
    }
  }
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultTableCap = 20'000'000;

/// Meet-in-the-middle: tabulate all floor(m/2)-subset XORs, then probe the
/// ceil(m/2)-subset prefixes in lex order.  A prefix P pairs with a suffix S
/// only when max(P) < min(S), so the first hit is the lex-first witness.
/// Throws ResourceLimit if the table would hold more than table_cap entries.
inline std::optional<Witness> mitm_solve(const CandidateUniverse& u, const ParityVector& target,
                                         std::size_t m, std::uint64_t table_cap = kDefaultTableCap) {
  if (m < 2) throw ValidationError("mitm_solve: m must be at least 2");
  if (m > u.size()) return std::nullopt;
  const std::size_t lo = m / 2;
  const std::size_t hi = m - lo;
  // Table size C(|U|, lo) computed in floating point to avoid the 64-vertex binomial table.
  double entries = 1.0;
  for (std::size_t i = 0; i < lo; ++i)
    entries = entries * static_cast<double>(u.size() - i) / static_cast<double>(i + 1);
  if (entries > static_cast<double>(table_cap))
    throw ResourceLimit("mitm_solve: table of " + std::to_string(static_cast<std::uint64_t>(entries)) +
                        " entries exceeds the cap of " + std::to_string(table_cap));

  // Suffix tuples are appended in lex order, so each bucket is sorted by first index.
  std::vector<std::size_t> flat;
  std::unordered_map<ParityVector, std::vector<std::uint32_t>, ParityVectorHash> table;
  table.reserve(static_cast<std::size_t>(entries));
  std::uint32_t id = 0;
  detail::for_each_subset_xor(u, lo, 0, u.size(), [&](const Witness& t, const ParityVector& x) {
    flat.insert(flat.end(), t.begin(), t.end());
    table[x].push_back(id++);
    return true;
  });

  std::optional<Witness> found;
  detail::for_each_subset_xor(u, hi, 0, u.size(), [&](const Witness& p, const ParityVector& x) {
    const auto it = table.find(x ^ target);
    if (it == table.end()) return true;
    const auto& bucket = it->second;
    const auto first = std::partition_point(bucket.begin(), bucket.end(), [&](std::uint32_t sid) {
      return flat[static_cast<std::size_t>(sid) * lo] <= p.back();
    });
    if (first == bucket.end()) return true;
    Witness w = p;
    const auto* s = &flat[static_cast<std::size_t>(*first) * lo];
    w.insert(w.end(), s, s + lo);
    found = std::move(w);
    return false;
  });
  return found;
}

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

/// Depth-first lex enumeration with a weight bound: the residual must be
/// reachable with the remaining picks, i.e. popcount(residual) <=
/// remaining * (largest footprint at or after the next index).  Throws
/// ResourceLimit after node_budget visited nodes.
inline std::optional<Witness> pruned_dfs_solve(const CandidateUniverse& u, const ParityVector& target,
                                               std::size_t m,
                                               std::uint64_t node_budget = kDefaultNodeBudget) {
  if (m == 0) return target.none() ? std::optional<Witness>(Witness{}) : std::nullopt;
  if (m > u.size()) return std::nullopt;
  std::vector<std::size_t> suffix_max(u.size() + 1, 0);
  for (std::size_t i = u.size(); i-- > 0;)
    suffix_max[i] = std::max(suffix_max[i + 1], u.vectors[i].popcount());

  Witness pick(m);
  std::vector<ParityVector> acc(m + 1, ParityVector(u.n, u.r));
  acc[0] = target;
  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  pick[0] = 0;
  while (true) {
    const bool exhausted = pick[depth] + (m - depth) > u.size() ||
                           acc[depth].popcount() > (m - depth) * suffix_max[pick[depth]];
    if (exhausted) {
      if (depth == 0) return std::nullopt;
      ++pick[--depth];
      continue;
    }
    if (++nodes > node_budget) throw ResourceLimit("pruned_dfs_solve: node budget exhausted");
    acc[depth + 1] = acc[depth] ^ u.vectors[pick[depth]];
    if (depth + 1 == m) {
      if (acc[m].none()) return pick;
      ++pick[depth];
    } else {
      pick[depth + 1] = pick[depth] + 1;
      ++depth;
    }
  }
}

// ---------------------------------------------------------------------------
// Minimum odd cover
// ---------------------------------------------------------------------------

enum class SearchStatus { found, absent, inconclusive };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchOptions {
  std::uint64_t candidate_cap = kDefaultCandidateCap;
  std::uint64_t table_cap = kDefaultTableCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t naive_limit = 100'000'000;  ///< use naive enumeration when C(|U|, m) is at most this
};

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Cover> cover;   ///< witness when found
  std::size_t proven_above = 0; ///< no odd cover of size <= proven_above exists
  std::string strategy;         ///< strategy used for the final size tried
  std::string reason;           ///< why the search was inconclusive
};

namespace detail {

inline double subset_count(std::size_t total, std::size_t m) {
  double c = 1.0;
  for (std::size_t i = 0; i < m && i < total; ++i)
    c = c * static_cast<double>(total - i) / static_cast<double>(i + 1);
  return m > total ? 0.0 : c;
}

}  // namespace detail

/// Finds an m-subset of the universe XOR-ing to target using the strategy
/// ladder: naive enumeration when small enough, meet-in-the-middle for m <= 6,
/// pruned depth-first search otherwise.  Sets strategy to the name used.
inline std::optional<Witness> solve_exact_size(const CandidateUniverse& u, const ParityVector& target,
                                               std::size_t m, const SearchOptions& opt,
                                               std::string& strategy) {
  if (m == 1 || detail::subset_count(u.size(), m) <= static_cast<double>(opt.naive_limit)) {
    strategy = "naive";
    return naive_solve(u, target, m);
  }
  if (m <= 6) {
    strategy = "meet-in-the-middle";
    return mitm_solve(u, target, m, opt.table_cap);
  }
  strategy = "pruned-dfs";
  return pruned_dfs_solve(u, target, m, opt.node_budget);
}

/// Smallest m <= max_size admitting an odd cover of K_n^(r) by m distinct blocks.
inline SearchResult min_odd_cover(std::size_t n, std::size_t r, std::size_t max_size,
                                  const SearchOptions& opt = {}) {
  if (r < 2 || n < r) throw ValidationError("min_odd_cover: need n >= r >= 2");
  if (max_size < 1) throw ValidationError("min_odd_cover: max_size must be at least 1");
  SearchResult result;
  CandidateUniverse u;
  try {
    u = enumerate_candidates(n, r, opt.candidate_cap);
  } catch (const ResourceLimit& e) {
    result.reason = e.what();
    return result;
  }
  const auto target = ParityVector::ones(n, r);
  for (std::size_t m = 1; m <= max_size; ++m) {
    try {
      const auto w = solve_exact_size(u, target, m, opt, result.strategy);
      if (w) {
        std::vector<Block> blocks;
        for (auto i : *w) blocks.push_back(u.blocks[i]);
        Cover cover(n, r, std::move(blocks));
        if (!is_odd_cover(cover)) throw std::logic_error("min_odd_cover: witness failed verification");
        result.status = SearchStatus::found;
        result.cover = std::move(cover);
        return result;
      }
    } catch (const ResourceLimit& e) {
      result.reason = e.what();
      return result;
    }
    result.proven_above = m;
  }
  result.status = SearchStatus::absent;
  return result;
}

}  // namespace oddcover
