#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace invperm {

/// Weakly decreasing positive parts. The empty partition is valid (sum 0).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::int64_t sum() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Ordered sequence of positive terms.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> terms);
  Composition(std::initializer_list<int> terms);

  std::span<const int> terms() const noexcept { return terms_; }
  int size() const noexcept { return static_cast<int>(terms_.size()); }
  int total() const noexcept;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a,
                                          const Composition& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::vector<int> terms_;
};

/// A partition is Gorenstein when parts[i] + i (1-based) takes one value
/// over every index where the next part (0 past the end) differs.
bool is_gorenstein(const Partition& p);
/// The common value of parts[i] + i over descent positions. Absent for the
/// empty partition and for partitions that are not Gorenstein.
std::optional<int> diagonal_constant(const Partition& p);

/// Read in increasing order, possibly after one leading zero, entry i is
/// i or i - 1 and not every entry is i - 1. The empty partition qualifies.
bool is_almost_triangular(const Partition& p);
bool has_distinct_parts(const Partition& p);
bool has_equal_parts(const Partition& p);

struct Coin {
  int row;  // 1 = bottom
  int pos;  // 1-based; (row, pos) rests on (row-1, pos) and (row-1, pos+1)
  friend auto operator<=>(const Coin&, const Coin&) = default;
};

/// Explicit fountain geometry. Construction checks that the bottom row is
/// 1..b and that every higher coin has both supports.
class CoinSet {
 public:
  CoinSet() = default;
  explicit CoinSet(std::set<Coin> coins);

  const std::set<Coin>& coins() const noexcept { return coins_; }
  bool contains(int row, int pos) const {
    return coins_.contains(Coin{row, pos});
  }
  int size() const noexcept { return static_cast<int>(coins_.size()); }
  int bottom_width() const noexcept;

  friend bool operator==(const CoinSet&, const CoinSet&) = default;

 private:
  std::set<Coin> coins_;
};

/// Fountain in diagonal-removal form: a full triangle with `base` coins on
/// the bottom row, minus missing[i] coins from the top of the up-right
/// diagonal that starts at bottom position i + 1.
class Fountain {
 public:
  Fountain() = default;
  Fountain(int base, std::vector<int> missing);

  int base() const noexcept { return base_; }
  std::span<const int> missing() const noexcept { return missing_; }
  std::int64_t coin_count() const noexcept;
  /// Coins left on diagonal i (0-based).
  int height(int i) const { return base_ - i - missing_[i]; }

  friend bool operator==(const Fountain&, const Fountain&) = default;
  friend std::strong_ordering operator<=>(const Fountain& a,
                                          const Fountain& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.missing_ <=> b.missing_;
  }

 private:
  int base_ = 0;
  std::vector<int> missing_;
};

CoinSet fountain_to_coinset(const Fountain& f);
Fountain coinset_to_fountain(const CoinSet& c);

/// Coins on odd rows (bottom row included).
int even_size(const CoinSet& c);
int even_size(const Fountain& f);

/// Bender's encoding: row i spans [lower[i], upper[i]). The empty polyomino
/// (no rows) stands for the zero-cell object.
class ParallelogramPolyomino {
 public:
  ParallelogramPolyomino() = default;
  ParallelogramPolyomino(std::vector<int> lower, std::vector<int> upper);

  std::span<const int> lower() const noexcept { return lower_; }
  std::span<const int> upper() const noexcept { return upper_; }
  int rows() const noexcept { return static_cast<int>(lower_.size()); }

  friend bool operator==(const ParallelogramPolyomino&,
                         const ParallelogramPolyomino&) = default;
  friend std::strong_ordering operator<=>(const ParallelogramPolyomino& a,
                                          const ParallelogramPolyomino& b) {
    if (auto c = a.lower_ <=> b.lower_; c != 0) return c;
    return a.upper_ <=> b.upper_;
  }

 private:
  std::vector<int> lower_;
  std::vector<int> upper_;
};

std::int64_t polyomino_cells(const ParallelogramPolyomino& p);

}  // namespace invperm
