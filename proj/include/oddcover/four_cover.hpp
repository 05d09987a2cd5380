#pragma once

// Recursive odd covers of K_n^(4).
//
// Split 0..n-1 into A = 0..a-1 and B = a..n-1 with a = ceil(n/2).  The 4-sets
// inside A or inside B come from the recursion, the 3+1 sets from a 3-cover of
// one side extended by the whole other side, and the 2+2 sets from the
// product of graph covers of the two sides.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcover/constructions.hpp"
#include "oddcover/core.hpp"

namespace oddcover {

namespace detail {

/// Minimum odd covers of K_n^(4), n = 4, 5, 6, found by exhaustive search
/// (sizes 1, 3, 6; no smaller cover exists).
inline const std::vector<std::vector<std::vector<Part>>>& four_base_tables() {
  static const std::vector<std::vector<std::vector<Part>>> tables = {
      // n = 4
      {{{0}, {1}, {2}, {3}}},
      // n = 5
      {{{0}, {1}, {2}, {3}}, {{0}, {1}, {2, 3}, {4}}, {{0, 1}, {2}, {3}, {4}}},
      // n = 6
      {{{0}, {1}, {2}, {3}},
       {{0}, {1}, {2, 3}, {4}},
       {{0}, {1}, {2, 3, 4}, {5}},
       {{0, 1}, {2}, {3}, {4}},
       {{0, 1}, {2}, {3, 4}, {5}},
       {{0, 1, 2}, {3}, {4}, {5}}},
  };
  return tables;
}

}  // namespace detail

inline constexpr std::size_t kFourBaseMin = 4;
inline constexpr std::size_t kFourBaseMax = 6;

/// Stored base cover for 4 <= n <= 6, re-verified on every load.
inline Cover four_base_cover(std::size_t n) {
  if (n < kFourBaseMin || n > kFourBaseMax) throw ValidationError("four_base_cover: n must be in 4..6");
  std::vector<Block> blocks;
  for (const auto& parts : detail::four_base_tables()[n - kFourBaseMin]) blocks.emplace_back(parts);
  Cover cover(n, 4, std::move(blocks));
  if (!is_odd_cover(cover))
    throw std::logic_error("four_base_cover: stored cover for n=" + std::to_string(n) + " does not verify");
  return cover;
}

namespace detail {

inline std::vector<Vertex> range_labels(std::size_t first, std::size_t count) {
  std::vector<Vertex> v(count);
  std::iota(v.begin(), v.end(), static_cast<Vertex>(first));
  return v;
}

/// Recursive cover, allowing n < 4 (empty: K_n^(4) has no edges).
inline Cover four_cover_any(std::size_t n) {
  if (n < kFourBaseMin) return Cover(n, 4);
  if (n <= kFourBaseMax) return four_base_cover(n);
  const std::size_t a = (n + 1) / 2;
  const std::size_t b = n / 2;
  const auto a_labels = range_labels(0, a);
  const auto b_labels = range_labels(a, b);

  Cover out(n, 4);
  auto append = [&out](const Cover& c) {
    for (const auto& blk : c.blocks()) out.add(blk);
  };
  append(relabel(four_cover_any(a), a_labels, n));
  append(relabel(four_cover_any(b), b_labels, n));
  append(extend_three_cover(relabel(best_three_cover(a), a_labels, n), b_labels));
  append(extend_three_cover(relabel(best_three_cover(b), b_labels, n), a_labels));
  append(product_cover(best_graph_cover(a), best_graph_cover(b)));
  return out;
}

}  // namespace detail

/// Odd cover of K_n^(4) for n >= 4.
inline Cover recursive_four_cover(std::size_t n) {
  if (n < 4) throw ValidationError("recursive_four_cover: n must be at least 4");
  return detail::four_cover_any(n);
}

/// Size of recursive_four_cover(n) from the recursion alone, given the sizes
/// of the best 3-uniform and graph covers of each half.
inline std::size_t recursive_four_size(std::size_t n) {
  if (n < kFourBaseMin) return 0;
  if (n <= kFourBaseMax) return detail::four_base_tables()[n - kFourBaseMin].size();
  const std::size_t a = (n + 1) / 2;
  const std::size_t b = n / 2;
  return recursive_four_size(a) + recursive_four_size(b) + best_three_cover(a).size() +
         best_three_cover(b).size() + best_graph_cover(a).size() * best_graph_cover(b).size();
}

}  // namespace oddcover
