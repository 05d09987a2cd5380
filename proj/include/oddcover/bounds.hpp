#pragma once

// Known values and bounds for the odd cover numbers b_r(n), r = 2, 3, 4.
//
// The static table encodes published results as cited data.  Exhaustive
// search results can tighten a row at runtime through BoundsLedger.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddcover/constructions.hpp"
#include "oddcover/four_cover.hpp"
#include "oddcover/search.hpp"

namespace oddcover {

enum class BoundStatus { exact, range };

inline const char* to_string(BoundStatus s) { return s == BoundStatus::exact ? "exact" : "range"; }

struct BoundsRecord {
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  BoundStatus status = BoundStatus::range;
  std::vector<std::string> provenance;
};

namespace provenance {
inline constexpr const char* kRankBound = "cited: rank bound b(n) >= floor(n/2), extended by links";
inline constexpr const char* kOddGraph = "cited: b(n) = (n+1)/2 for odd n (link of the even circle 3-cover)";
inline constexpr const char* kZeroMod8 = "cited: b(n) = n/2 for n = 0 mod 8 (signed-vector bipartite cover)";
inline constexpr const char* kPowerOfThreeLink = "cited: b(n) = n/2 for n = 3^k - 1 (link of the F_3^k 3-cover)";
inline constexpr const char* kEvenGraphRange = "cited: b(n) in {n/2, n/2 + 1} for even n";
inline constexpr const char* kLiteral = "cited: b(12) = 7, b(14) = 8";
inline constexpr const char* kEvenThree = "cited: b_3(n) = n/2 for even n (circle construction)";
inline constexpr const char* kPowerOfThree = "cited: b_3(3^k) = (3^k - 1)/2 (F_3^k construction)";
inline constexpr const char* kOneMod8 = "cited: b_3(8k+1) = 4k (extension of the signed-vector cover)";
inline constexpr const char* kOddThreeRange = "cited: b_3(n) in {(n-1)/2, (n+1)/2} for odd n";
inline constexpr const char* kFourRecursive = "constructed: recursive 4-cover";
inline constexpr const char* kSearch = "exhaustive search";
}  // namespace provenance

/// floor((n - r + 2)/2): r - 2 link steps down to K_{n-r+2}, then the rank bound.
inline std::size_t generic_lower_bound(std::size_t n, std::size_t r) {
  if (r < 2) throw ValidationError("generic_lower_bound: r must be at least 2");
  if (n < r) throw ValidationError("generic_lower_bound: need n >= r");
  return (n - r + 2) / 2;
}

namespace detail {

inline BoundsRecord exact_record(std::size_t r, std::size_t n, std::size_t value,
                                 std::vector<std::string> prov) {
  return {r, n, value, value, BoundStatus::exact, std::move(prov)};
}

inline BoundsRecord range_record(std::size_t r, std::size_t n, std::size_t lo, std::size_t hi,
                                 std::vector<std::string> prov) {
  return {r, n, lo, hi, lo == hi ? BoundStatus::exact : BoundStatus::range, std::move(prov)};
}

}  // namespace detail

/// Static ledger entry for b_r(n).
inline BoundsRecord known_status(std::size_t n, std::size_t r) {
  if (r < 2 || r > 4) throw UnsupportedError("known_status: r must be 2, 3 or 4");
  if (n < r) throw ValidationError("known_status: need n >= r");
  using namespace provenance;
  if (r == 2) {
    if (n % 2 == 1) return detail::exact_record(r, n, (n + 1) / 2, {kOddGraph});
    if (n % 8 == 0) return detail::exact_record(r, n, n / 2, {kZeroMod8});
    if (is_power_of_three(n + 1)) return detail::exact_record(r, n, n / 2, {kPowerOfThreeLink});
    if (n == 12) return detail::exact_record(r, n, 7, {kLiteral});
    if (n == 14) return detail::exact_record(r, n, 8, {kLiteral});
    return detail::range_record(r, n, n / 2, n / 2 + 1, {kEvenGraphRange});
  }
  if (r == 3) {
    if (n % 2 == 0) return detail::exact_record(r, n, n / 2, {kEvenThree});
    if (is_power_of_three(n)) return detail::exact_record(r, n, (n - 1) / 2, {kPowerOfThree});
    if (n % 8 == 1) return detail::exact_record(r, n, (n - 1) / 2, {kOneMod8});
    return detail::range_record(r, n, (n - 1) / 2, (n + 1) / 2, {kOddThreeRange});
  }
  return detail::range_record(r, n, generic_lower_bound(n, 4), recursive_four_size(n),
                              {kRankBound, kFourRecursive});
}

/// One row of the b_3 versus f_3 comparison.
struct PartitionComparison {
  std::size_t n = 0;
  std::size_t odd_cover_upper = 0;  ///< known_status(n, 3).upper
  std::size_t partition_number = 0; ///< f_3(n) = n - 2
  bool strict = false;              ///< odd_cover_upper < partition_number
};

/// Compares the best known b_3(n) with the partition number f_3(n) = n - 2.
inline PartitionComparison compare_with_partition(std::size_t n, std::size_t r) {
  if (r != 3) throw UnsupportedError("compare_with_partition: only r = 3 has an exact partition number");
  const auto rec = known_status(n, r);
  PartitionComparison row{n, rec.upper, n - 2, false};
  row.strict = row.odd_cover_upper < row.partition_number;
  return row;
}

/// Static ledger plus search results committed at runtime.  Reads and the
/// commit step are serialized by one mutex.
class BoundsLedger {
 public:
  [[nodiscard]] BoundsRecord lookup(std::size_t n, std::size_t r) const {
    std::lock_guard lock(mu_);
    const auto it = overrides_.find({r, n});
    return it != overrides_.end() ? it->second : known_status(n, r);
  }

  /// Folds a search outcome into the row for (n, r).  A found cover fixes the
  /// value; an absent result raises the lower bound past max_size.  Throws
  /// std::logic_error if the outcome contradicts the row.
  BoundsRecord commit(std::size_t n, std::size_t r, const SearchResult& result) {
    std::lock_guard lock(mu_);
    const auto it = overrides_.find({r, n});
    BoundsRecord rec = it != overrides_.end() ? it->second : known_status(n, r);
    std::size_t lo = rec.lower;
    std::size_t hi = rec.upper;
    if (result.status == SearchStatus::found) {
      lo = hi = result.cover->size();
    } else {
      lo = std::max(lo, result.proven_above + 1);
    }
    if (lo < rec.lower || hi > rec.upper || lo > hi)
      throw std::logic_error("BoundsLedger: search result for b_" + std::to_string(r) + "(" +
                             std::to_string(n) + ") contradicts the ledger");
    if (lo != rec.lower || hi != rec.upper) {
      rec.lower = lo;
      rec.upper = hi;
      rec.status = lo == hi ? BoundStatus::exact : BoundStatus::range;
      rec.provenance.emplace_back(provenance::kSearch);
    }
    overrides_[{r, n}] = rec;
    return rec;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::size_t, std::size_t>, BoundsRecord> overrides_;
};

}  // namespace oddcover
