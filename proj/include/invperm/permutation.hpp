#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace invperm {

/// A permutation of 1..n in one-line notation. Values are validated on
/// construction and immutable afterwards; n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word);

  /// Skips validation. The caller guarantees that `word` is a rearrangement
  /// of 1..n; used on hot enumeration paths.
  static Permutation unchecked(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// Inversion table b_1..b_n with b_i <= n - i.
class SubdiagonalSequence {
 public:
  SubdiagonalSequence() = default;
  explicit SubdiagonalSequence(std::vector<int> entries);
  SubdiagonalSequence(std::initializer_list<int> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  /// Entry i (0-based) equals its maximum n - 1 - i.
  bool is_diagonal(std::size_t i) const {
    return entries_[i] == size() - 1 - static_cast<int>(i);
  }
  std::int64_t sum() const noexcept;

  friend bool operator==(const SubdiagonalSequence&,
                         const SubdiagonalSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// Non-empty set of distinct patterns of length 1..4, kept sorted.
class PatternSet {
 public:
  explicit PatternSet(std::vector<Permutation> patterns);
  PatternSet(std::initializer_list<Permutation> patterns);

  std::span<const Permutation> patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
  friend std::strong_ordering operator<=>(const PatternSet& a,
                                          const PatternSet& b) {
    return a.patterns_ <=> b.patterns_;
  }

 private:
  std::vector<Permutation> patterns_;
};

Permutation make_permutation(std::span<const int> word);

std::int64_t inv_count(const Permutation& p);
SubdiagonalSequence inversion_table(const Permutation& p);
Permutation permutation_from_table(const SubdiagonalSequence& table);

/// Appends the fewest zeros that make `seq` subdiagonal.
std::vector<int> pad_to_subdiagonal(std::span<const int> seq);

bool contains_pattern(const Permutation& p, const Permutation& pattern);
bool avoids_all(const Permutation& p, const PatternSet& patterns);

/// Maximal factorisation under direct sum. Each component is standardised
/// to 1..m. Empty input yields no components.
std::vector<Permutation> components(const Permutation& p);
/// True for the empty permutation by convention.
bool is_indecomposable(const Permutation& p);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

enum class Symmetry { reverse, complement, inverse, reverse_complement };

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation apply_symmetry(const Permutation& p, Symmetry which);

std::string symmetry_name(Symmetry which);

}  // namespace invperm
