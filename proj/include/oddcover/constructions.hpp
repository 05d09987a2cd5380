#pragma once

// Explicit odd-cover constructions and the operators that move between
// uniformities and ground-set sizes.
//
// Vertex labellings used by the constructions:
//   circle_cover      vertex i is the residue i of Z_n.
//   gf3_cover         vertex id = sum_i y_i * 3^i for y in F_3^k (little-endian).
//   signed_*          vertex i (< m) carries +row_i of the sign matrix,
//                     vertex m + i carries -row_i.
//   extend_to_8kplus1 the extra vertex is 2m.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcover/core.hpp"

namespace oddcover {

// ---------------------------------------------------------------------------
// Small arithmetic helpers
// ---------------------------------------------------------------------------

/// k with 3^k == n, if n is a positive power of three.
inline std::optional<std::size_t> log3_exact(std::size_t n) {
  if (n < 3) return std::nullopt;
  std::size_t k = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++k;
  }
  return n == 1 ? std::optional<std::size_t>(k) : std::nullopt;
}

inline bool is_power_of_three(std::size_t n) { return log3_exact(n).has_value(); }

// ---------------------------------------------------------------------------
// SkewSignMatrix
// ---------------------------------------------------------------------------

/// m x m matrix over {-1, 0, +1}, zero exactly on the diagonal, M(i,j) = -M(j,i).
class SkewSignMatrix {
 public:
  SkewSignMatrix() = default;

  /// Validates the sign and skew invariants.
  explicit SkewSignMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
    const std::size_t m = entries_.size();
    if (m < 2) throw ValidationError("SkewSignMatrix: dimension must be at least 2");
    for (std::size_t i = 0; i < m; ++i) {
      if (entries_[i].size() != m) throw ValidationError("SkewSignMatrix: matrix is not square");
      for (std::size_t j = 0; j < m; ++j) {
        const int e = entries_[i][j];
        if (e < -1 || e > 1) throw ValidationError("SkewSignMatrix: entries must be -1, 0 or 1");
        if ((i == j) != (e == 0))
          throw ValidationError("SkewSignMatrix: zero entries must lie exactly on the diagonal");
        if (i != j && entries_[j][i] != -e)
          throw ValidationError("SkewSignMatrix: matrix is not skew-symmetric");
      }
    }
  }

  /// Builds the matrix from its strict upper triangle, given as a predicate
  /// upper(i, j) -> +1 or -1 for i < j.
  template <typename Fn>
  static SkewSignMatrix from_upper(std::size_t m, Fn&& upper) {
    std::vector<std::vector<int>> e(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        e[i][j] = upper(i, j);
        e[j][i] = -e[i][j];
      }
    return SkewSignMatrix(std::move(e));
  }

  /// Uniformly random skew sign matrix.
  template <typename Rng>
  static SkewSignMatrix random(std::size_t m, Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    return from_upper(m, [&](std::size_t, std::size_t) { return coin(rng) ? 1 : -1; });
  }

  [[nodiscard]] std::size_t dimension() const noexcept { return entries_.size(); }
  [[nodiscard]] int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

  friend bool operator==(const SkewSignMatrix&, const SkewSignMatrix&) = default;

 private:
  std::vector<std::vector<int>> entries_;
};

namespace detail {

/// Sign vector of vertex v in the 2m-vertex signed labelling, coordinate j.
inline int signed_label(const SkewSignMatrix& M, std::size_t v, std::size_t j) {
  const std::size_t m = M.dimension();
  return v < m ? M(v, j) : -M(v - m, j);
}

/// (A_j, B_j, C_j): vertices whose j-th entry is +1, -1, 0.
inline std::array<Part, 3> coordinate_tripartition(const SkewSignMatrix& M, std::size_t j) {
  std::array<Part, 3> out;
  for (std::size_t v = 0; v < 2 * M.dimension(); ++v) {
    const int e = signed_label(M, v, j);
    out[e == 1 ? 0 : e == -1 ? 1 : 2].push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 3-uniform constructions
// ---------------------------------------------------------------------------

/// n/2 blocks on Z_n: H_i = ({i, i+k}, {i+1..i+k-1}, {i+k+1..i-1}), k = n/2.
inline Cover circle_cover(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw ValidationError("circle_cover: n must be even and at least 4");
  const std::size_t k = n / 2;
  Cover cover(n, 3);
  for (std::size_t i = 0; i < k; ++i) {
    Part diameter{static_cast<Vertex>(i), static_cast<Vertex>(i + k)};
    Part left;
    Part right;
    for (std::size_t d = 1; d < k; ++d) {
      left.push_back(static_cast<Vertex>((i + d) % n));
      right.push_back(static_cast<Vertex>((i + k + d) % n));
    }
    cover.add(Block({std::move(diameter), std::move(left), std::move(right)}));
  }
  return cover;
}

/// Vertex id of a vector over F_3 (little-endian base 3).
inline Vertex gf3_vertex_id(std::span<const int> coords) {
  Vertex id = 0;
  for (std::size_t i = coords.size(); i-- > 0;) id = id * 3 + static_cast<Vertex>(coords[i]);
  return id;
}

/// Coordinates of a vertex id in F_3^k.
inline std::vector<int> gf3_coordinates(Vertex id, std::size_t k) {
  std::vector<int> c(k);
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = static_cast<int>(id % 3);
    id /= 3;
  }
  return c;
}

/// (n-1)/2 blocks for n = 3^k: one per line {x, 2x} through the origin, with
/// parts the three hyperplanes x.y = 0, 1, 2.  The representative x is the
/// one whose lowest nonzero coordinate is 1, taken in increasing id order.
inline Cover gf3_cover(std::size_t n) {
  const auto k = log3_exact(n);
  if (!k) throw ValidationError("gf3_cover: n must be a power of 3");
  std::vector<std::vector<int>> points(n);
  for (std::size_t v = 0; v < n; ++v) points[v] = gf3_coordinates(static_cast<Vertex>(v), *k);
  Cover cover(n, 3);
  for (std::size_t x = 1; x < n; ++x) {
    const auto& xc = points[x];
    const auto lead = std::find_if(xc.begin(), xc.end(), [](int c) { return c != 0; });
    if (*lead != 1) continue;
    std::vector<Part> parts(3);
    for (std::size_t y = 0; y < n; ++y) {
      const int dot = std::inner_product(xc.begin(), xc.end(), points[y].begin(), 0) % 3;
      parts[static_cast<std::size_t>(dot)].push_back(static_cast<Vertex>(y));
    }
    cover.add(Block(std::move(parts)));
  }
  return cover;
}

/// m blocks (A_j, B_j, C_j) on 2m vertices labelled by +-rows of M.
inline Cover signed_tripartition_cover(const SkewSignMatrix& M) {
  const std::size_t m = M.dimension();
  Cover cover(2 * m, 3);
  for (std::size_t j = 0; j < m; ++j) {
    auto [a, b, c] = detail::coordinate_tripartition(M, j);
    cover.add(Block({std::move(a), std::move(b), std::move(c)}));
  }
  return cover;
}

/// The sign matrix whose tripartitions are exactly the circle blocks:
/// M(i,j) = +1 for i > j.
inline SkewSignMatrix circle_sign_matrix(std::size_t m) {
  return SkewSignMatrix::from_upper(m, [](std::size_t, std::size_t) { return -1; });
}

/// Rows and columns indexed 1..m: for i < j the entry is -1 iff j >= i + 2,
/// or j = i + 1 with i = 0, 1 (mod 4); +1 otherwise.
inline SkewSignMatrix buchanan_matrix(std::size_t m) {
  if (m == 0 || m % 4 != 0) throw ValidationError("buchanan_matrix: m must be a positive multiple of 4");
  return SkewSignMatrix::from_upper(m, [](std::size_t i0, std::size_t j0) {
    const std::size_t i = i0 + 1;
    const std::size_t j = j0 + 1;
    const bool negative = j >= i + 2 || (j == i + 1 && (i % 4 == 0 || i % 4 == 1));
    return negative ? -1 : 1;
  });
}

/// m bipartite blocks (A_j, B_j) odd-covering K_{2m}.
inline Cover buchanan_bipartite_cover(std::size_t m) {
  const auto M = buchanan_matrix(m);
  Cover cover(2 * m, 2);
  for (std::size_t j = 0; j < m; ++j) {
    auto [a, b, c] = detail::coordinate_tripartition(M, j);
    cover.add(Block({std::move(a), std::move(b)}));
  }
  return cover;
}

/// m blocks (A_j, B_j, C_j + {2m}) odd-covering K_{2m+1}^(3).
inline Cover extend_to_8kplus1(std::size_t m) {
  const auto M = buchanan_matrix(m);
  Cover cover(2 * m + 1, 3);
  for (std::size_t j = 0; j < m; ++j) {
    auto [a, b, c] = detail::coordinate_tripartition(M, j);
    c.push_back(static_cast<Vertex>(2 * m));
    cover.add(Block({std::move(a), std::move(b), std::move(c)}));
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

namespace detail {

/// Map that removes vertex v and shifts larger ids down by one.
inline std::vector<Vertex> removal_map(std::size_t n, Vertex v) {
  std::vector<Vertex> map(n);
  for (std::size_t u = 0; u < n; ++u) map[u] = static_cast<Vertex>(u < v ? u : u - 1);
  return map;
}

inline Block map_block(const std::vector<Part>& parts, std::span<const Vertex> map) {
  std::vector<Part> out;
  out.reserve(parts.size());
  for (const auto& p : parts) {
    Part q;
    q.reserve(p.size());
    for (auto u : p) q.push_back(map[u]);
    out.push_back(std::move(q));
  }
  return Block(std::move(out));
}

}  // namespace detail

/// Drops the class containing v from every block that meets v; blocks missing
/// v are discarded.  The result lives on 0..n-2 (v removed, larger ids shifted).
inline Cover link(const Cover& cover, Vertex v) {
  if (cover.r() < 3) throw UnsupportedError("link: uniformity must be at least 3");
  if (v >= cover.n()) throw ValidationError("link: vertex out of range");
  const auto map = detail::removal_map(cover.n(), v);
  Cover out(cover.n() - 1, cover.r() - 1);
  for (const auto& b : cover.blocks()) {
    const auto at = b.part_of(v);
    if (!at) continue;
    std::vector<Part> parts;
    for (std::size_t i = 0; i < b.uniformity(); ++i)
      if (i != *at) parts.push_back(b.part(i));
    out.add(detail::map_block(parts, map));
  }
  return out;
}

/// Removes v from the ground set; blocks left with an empty class are dropped.
inline Cover delete_vertex(const Cover& cover, Vertex v) {
  if (v >= cover.n()) throw ValidationError("delete_vertex: vertex out of range");
  const auto map = detail::removal_map(cover.n(), v);
  Cover out(cover.n() - 1, cover.r());
  for (const auto& b : cover.blocks()) {
    std::vector<Part> parts = b.parts();
    bool emptied = false;
    for (auto& p : parts) {
      const auto it = std::find(p.begin(), p.end(), v);
      if (it == p.end()) continue;
      p.erase(it);
      emptied = p.empty();
    }
    if (!emptied) out.add(detail::map_block(parts, map));
  }
  return out;
}

/// Adds vertex n and the star ({n}, {0..n-1}).
inline Cover add_star_vertex(const Cover& cover) {
  if (cover.r() != 2) throw UnsupportedError("add_star_vertex: cover must be 2-uniform");
  const std::size_t n = cover.n();
  if (n == 0) throw ValidationError("add_star_vertex: empty ground set");
  Part rest(n);
  std::iota(rest.begin(), rest.end(), Vertex{0});
  Cover out(n + 1, 2, cover.blocks());
  out.add(Block({Part{static_cast<Vertex>(n)}, std::move(rest)}));
  return out;
}

// ---------------------------------------------------------------------------
// 4-uniform composition
// ---------------------------------------------------------------------------

/// Products (X1, X2, Y1, Y2) of a graph cover F on 0..|F|-1 and a graph cover
/// G placed on |F|..|F|+|G|-1.  Exactly the 4-sets split 2-2 across the two
/// ground sets get nonzero coverage.
inline Cover product_cover(const Cover& f, const Cover& g) {
  if (f.r() != 2 || g.r() != 2) throw UnsupportedError("product_cover: both inputs must be graph covers");
  const std::size_t shift = f.n();
  Cover out(f.n() + g.n(), 4);
  for (const auto& x : f.blocks())
    for (const auto& y : g.blocks()) {
      std::vector<Part> parts = x.parts();
      for (const auto& p : y.parts()) {
        Part q;
        for (auto u : p) q.push_back(static_cast<Vertex>(u + shift));
        parts.push_back(std::move(q));
      }
      out.add(Block(std::move(parts)));
    }
  return out;
}

/// Turns each 3-uniform block (P1, P2, P3) into (P1, P2, P3, extra).  The
/// ground set grows to hold every vertex of extra.
inline Cover extend_three_cover(const Cover& t, std::span<const Vertex> extra) {
  if (t.r() != 3) throw UnsupportedError("extend_three_cover: input must be 3-uniform");
  if (extra.empty()) throw ValidationError("extend_three_cover: extra class is empty");
  const auto used = used_vertices(t);
  Part b(extra.begin(), extra.end());
  std::sort(b.begin(), b.end());
  for (auto v : b)
    if (std::binary_search(used.begin(), used.end(), v))
      throw ValidationError("extend_three_cover: extra class overlaps the 3-cover");
  const std::size_t n = std::max<std::size_t>(t.n(), static_cast<std::size_t>(b.back()) + 1);
  Cover out(n, 4);
  for (const auto& blk : t.blocks()) {
    std::vector<Part> parts = blk.parts();
    parts.push_back(b);
    out.add(Block(std::move(parts)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Best-known dispatch
// ---------------------------------------------------------------------------

/// A construction together with the name of the route that produced it.
struct Construction {
  std::string route;
  Cover cover;
};

namespace detail {

/// Keeps the smallest candidate; earlier routes win ties.
inline Construction pick(std::vector<Construction> routes) {
  auto best = std::min_element(routes.begin(), routes.end(), [](const auto& a, const auto& b) {
    return a.cover.size() < b.cover.size();
  });
  return std::move(*best);
}

}  // namespace detail

inline Construction best_graph_construction(std::size_t n);

/// Best known odd cover of K_n, with its route.
inline Construction best_graph_construction(std::size_t n) {
  if (n < 2) throw ValidationError("best_graph_cover: n must be at least 2");
  std::vector<Construction> routes;
  if (n % 8 == 0) routes.push_back({"buchanan2", buchanan_bipartite_cover(n / 2)});
  if (is_power_of_three(n + 1)) routes.push_back({"gf3-link", link(gf3_cover(n + 1), 0)});
  if (n % 2 == 1) routes.push_back({"circle-link", link(circle_cover(n + 1), 0)});
  if (routes.empty()) {
    auto up = best_graph_construction(n + 1);
    routes.push_back({up.route + "-delete", delete_vertex(up.cover, static_cast<Vertex>(n))});
  }
  return detail::pick(std::move(routes));
}

inline Cover best_graph_cover(std::size_t n) { return best_graph_construction(n).cover; }

/// Best known odd cover of K_n^(3), with its route.
inline Construction best_three_construction(std::size_t n) {
  if (n < 3) throw ValidationError("best_three_cover: n must be at least 3");
  std::vector<Construction> routes;
  if (n % 2 == 0) routes.push_back({"circle", circle_cover(n)});
  if (is_power_of_three(n)) routes.push_back({"gf3", gf3_cover(n)});
  if (n % 8 == 1) routes.push_back({"extend8k1", extend_to_8kplus1((n - 1) / 2)});
  if (routes.empty())
    routes.push_back({"circle-delete", delete_vertex(circle_cover(n + 1), static_cast<Vertex>(n))});
  return detail::pick(std::move(routes));
}

inline Cover best_three_cover(std::size_t n) { return best_three_construction(n).cover; }

}  // namespace oddcover
