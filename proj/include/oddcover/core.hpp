#pragma once

// Ground types for odd covers of complete r-uniform hypergraphs.
//
// A Block is a complete r-partite r-graph given by r disjoint nonempty vertex
// classes; it contains exactly the r-sets with one vertex in each class.  A
// Cover is a multiset of blocks over the ground set 0..n-1.  Parity footprints
// are GF(2) vectors indexed by the r-sets of 0..n-1 in colexicographic order.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddcover {

using Vertex = std::uint32_t;

/// Largest ground set the ranking tables support.
inline constexpr std::size_t kMaxVertices = 64;

/// Raised when a value violates a documented invariant (bad block, bad n, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked to work outside the uniformities it handles.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline const std::vector<std::vector<std::uint64_t>>& binomial_table() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxVertices + 1,
                                              std::vector<std::uint64_t>(kMaxVertices + 1, 0));
    for (std::size_t i = 0; i <= kMaxVertices; ++i) {
      t[i][0] = 1;
      for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// C(n, k) for n <= 64; zero when k > n.
inline std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (n > kMaxVertices) throw ValidationError("binomial: n exceeds " + std::to_string(kMaxVertices));
  if (k > n) return 0;
  return detail::binomial_table()[n][k];
}

// ---------------------------------------------------------------------------
// RSet
// ---------------------------------------------------------------------------

/// Strictly increasing sequence of r vertices.
class RSet {
 public:
  RSet() = default;

  explicit RSet(std::vector<Vertex> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw ValidationError("RSet: repeated vertex");
  }

  RSet(std::initializer_list<Vertex> elements) : RSet(std::vector<Vertex>(elements)) {}

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::span<const Vertex> elements() const noexcept { return elements_; }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
  }

  friend bool operator==(const RSet&, const RSet&) = default;
  friend auto operator<=>(const RSet&, const RSet&) = default;

 private:
  std::vector<Vertex> elements_;
};

/// Colexicographic rank of an r-set: sum over i of C(s_i, i+1).
inline std::uint64_t colex_rank(std::span<const Vertex> sorted) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += binomial(sorted[i], i + 1);
  return rank;
}

inline std::uint64_t colex_rank(const RSet& s) { return colex_rank(s.elements()); }

/// Inverse of colex_rank for r-sets of 0..n-1.
inline RSet colex_unrank(std::uint64_t rank, std::size_t r, std::size_t n) {
  if (rank >= binomial(n, r)) throw ValidationError("colex_unrank: rank out of range");
  std::vector<Vertex> out(r);
  std::size_t top = n;
  for (std::size_t i = r; i-- > 0;) {
    std::size_t c = i;
    while (c + 1 < top && binomial(c + 1, i + 1) <= rank) ++c;
    out[i] = static_cast<Vertex>(c);
    rank -= binomial(c, i + 1);
    top = c;
  }
  return RSet(std::move(out));
}

/// Calls fn(const std::vector<Vertex>&) for every r-subset of 0..n-1 in colex order.
template <typename Fn>
void for_each_rset(std::size_t n, std::size_t r, Fn&& fn) {
  if (r == 0 || r > n) return;
  std::vector<Vertex> s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = static_cast<Vertex>(i);
  while (true) {
    fn(static_cast<const std::vector<Vertex>&>(s));
    // Colex successor: bump the first element that can move without colliding.
    std::size_t i = 0;
    while (i < r && static_cast<std::size_t>(s[i]) + 1 == (i + 1 < r ? s[i + 1] : n)) ++i;
    if (i == r) return;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<Vertex>(j);
  }
}

// ---------------------------------------------------------------------------
// Block
// ---------------------------------------------------------------------------

using Part = std::vector<Vertex>;

/// A complete r-partite r-graph.  Always stored in canonical form: each part
/// sorted ascending, parts ordered by their minimum vertex.
class Block {
 public:
  Block() = default;

  /// Validates and canonicalizes.  Throws ValidationError on empty or
  /// overlapping parts, or fewer than two parts.
  explicit Block(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) throw ValidationError("Block: need at least two parts");
    for (auto& p : parts_) {
      if (p.empty()) throw ValidationError("Block: empty part");
      std::sort(p.begin(), p.end());
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return a.front() < b.front(); });
    std::vector<Vertex> all;
    for (const auto& p : parts_) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw ValidationError("Block: parts overlap");
  }

  Block(std::initializer_list<Part> parts) : Block(std::vector<Part>(parts)) {}

  [[nodiscard]] std::size_t uniformity() const noexcept { return parts_.size(); }
  [[nodiscard]] const std::vector<Part>& parts() const noexcept { return parts_; }
  [[nodiscard]] const Part& part(std::size_t i) const { return parts_[i]; }

  /// Index of the part holding v, if any.
  [[nodiscard]] std::optional<std::size_t> part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (std::binary_search(parts_[i].begin(), parts_[i].end(), v)) return i;
    return std::nullopt;
  }

  [[nodiscard]] Vertex max_vertex() const {
    Vertex m = 0;
    for (const auto& p : parts_) m = std::max(m, p.back());
    return m;
  }

  /// Number of r-sets the block contains.
  [[nodiscard]] std::uint64_t edge_count() const {
    std::uint64_t c = 1;
    for (const auto& p : parts_) c *= p.size();
    return c;
  }

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  std::vector<Part> parts_;
};

/// Returns the canonical form of a block given as raw parts.
inline Block canonicalize(std::vector<Part> parts) { return Block(std::move(parts)); }
inline Block canonicalize(const Block& block) { return Block(block.parts()); }

/// True iff s meets every part of the block.  Since the parts are disjoint and
/// |s| = r, this is the same as s having exactly one vertex per part.
inline bool contains_rset(const Block& block, const RSet& s) {
  if (block.uniformity() != s.size())
    throw ValidationError("contains_rset: uniformity mismatch");
  for (const auto& p : block.parts()) {
    const bool hit = std::any_of(s.elements().begin(), s.elements().end(), [&](Vertex v) {
      return std::binary_search(p.begin(), p.end(), v);
    });
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ParityVector
// ---------------------------------------------------------------------------

/// GF(2) vector with one bit per r-subset of 0..n-1, colex-indexed.
class ParityVector {
 public:
  ParityVector() = default;

  ParityVector(std::size_t n, std::size_t r)
      : n_(n), r_(r), bits_(binomial(n, r)), words_((bits_ + 63) / 64, 0) {}

  static ParityVector ones(std::size_t n, std::size_t r) {
    ParityVector v(n, r);
    std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
    v.trim();
    return v;
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t r() const noexcept { return r_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_; }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  ParityVector& operator^=(const ParityVector& o) {
    if (o.n_ != n_ || o.r_ != r_) throw ValidationError("ParityVector: shape mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend ParityVector operator^(ParityVector a, const ParityVector& b) { return a ^= b; }

  [[nodiscard]] std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  [[nodiscard]] bool all() const { return popcount() == bits_; }

  /// Index of the first clear bit, if any.
  [[nodiscard]] std::optional<std::size_t> first_zero() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const auto inv = ~words_[w];
      if (inv == 0) continue;
      const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(inv));
      if (i < bits_) return i;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ParityVectorHash {
  std::size_t operator()(const ParityVector& v) const noexcept { return v.hash(); }
};

/// Footprint of one block over the r-sets of 0..n-1.
inline ParityVector incidence_vector(const Block& block, std::size_t n) {
  const std::size_t r = block.uniformity();
  if (n > kMaxVertices) throw ValidationError("incidence_vector: n too large");
  if (block.max_vertex() >= n) throw ValidationError("incidence_vector: vertex out of range");
  ParityVector out(n, r);
  std::vector<std::size_t> idx(r, 0);
  std::vector<Vertex> s(r);
  const auto& parts = block.parts();
  while (true) {
    for (std::size_t i = 0; i < r; ++i) s[i] = parts[i][idx[i]];
    std::sort(s.begin(), s.end());
    out.flip(colex_rank(s));
    std::size_t i = 0;
    while (i < r && ++idx[i] == parts[i].size()) idx[i++] = 0;
    if (i == r) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cover
// ---------------------------------------------------------------------------

/// A multiset of r-uniform blocks on 0..n-1.
class Cover {
 public:
  Cover() = default;

  Cover(std::size_t n, std::size_t r, std::vector<Block> blocks = {})
      : n_(n), r_(r), blocks_(std::move(blocks)) {
    if (r_ < 2) throw ValidationError("Cover: uniformity must be at least 2");
    if (n_ > kMaxVertices) throw ValidationError("Cover: n exceeds " + std::to_string(kMaxVertices));
    for (const auto& b : blocks_) check(b);
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t r() const noexcept { return r_; }
  [[nodiscard]] std::size_t size() const noexcept { return blocks_.size(); }
  [[nodiscard]] bool empty() const noexcept { return blocks_.empty(); }
  [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] const Block& operator[](std::size_t i) const { return blocks_[i]; }

  void add(Block b) {
    check(b);
    blocks_.push_back(std::move(b));
  }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  void check(const Block& b) const {
    if (b.uniformity() != r_) throw ValidationError("Cover: block uniformity mismatch");
    if (b.max_vertex() >= n_) throw ValidationError("Cover: block vertex out of range");
  }

  std::size_t n_ = 0;
  std::size_t r_ = 2;
  std::vector<Block> blocks_;
};

/// GF(2) sum of the block footprints.
inline ParityVector cover_parity(const Cover& cover) {
  ParityVector acc(cover.n(), cover.r());
  for (const auto& b : cover.blocks()) acc ^= incidence_vector(b, cover.n());
  return acc;
}

struct VerifyResult {
  bool odd = false;
  std::optional<RSet> witness;  ///< an evenly covered r-set when !odd

  explicit operator bool() const noexcept { return odd; }
};

/// Checks that every r-set of 0..n-1 lies in an odd number of blocks.
inline VerifyResult is_odd_cover(const Cover& cover) {
  if (cover.r() > cover.n()) return {true, std::nullopt};
  const auto parity = cover_parity(cover);
  if (auto z = parity.first_zero()) return {false, colex_unrank(*z, cover.r(), cover.n())};
  return {true, std::nullopt};
}

/// Vertices v with v in some block part.
inline std::vector<Vertex> used_vertices(const Cover& cover) {
  std::vector<Vertex> out;
  for (const auto& b : cover.blocks())
    for (const auto& p : b.parts()) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Renames vertex v to labels[v] on a ground set of size n.
inline Cover relabel(const Cover& cover, std::span<const Vertex> labels, std::size_t n) {
  if (labels.size() < cover.n()) throw ValidationError("relabel: label map too short");
  std::vector<Block> blocks;
  blocks.reserve(cover.size());
  for (const auto& b : cover.blocks()) {
    std::vector<Part> parts;
    for (const auto& p : b.parts()) {
      Part q;
      for (auto v : p) q.push_back(labels[v]);
      parts.push_back(std::move(q));
    }
    blocks.emplace_back(std::move(parts));
  }
  return Cover(n, cover.r(), std::move(blocks));
}

}  // namespace oddcover

template <>
struct std::hash<oddcover::ParityVector> {
  std::size_t operator()(const oddcover::ParityVector& v) const noexcept { return v.hash(); }
};
