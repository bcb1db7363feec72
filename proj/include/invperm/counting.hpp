#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invperm/bigcount.hpp"
#include "invperm/permutation.hpp"

namespace invperm {

/// The symmetries that preserve both inversion count and indecomposability.
enum class GroupElement { identity, inverse, reverse_complement, rc_inverse };

std::string group_element_name(GroupElement g);
Permutation apply_group_element(const Permutation& p, GroupElement g);
PatternSet apply_group_element(const PatternSet& s, GroupElement g);

/// Lexicographically least image of s under the four group elements,
/// together with the element that produces it.
std::pair<PatternSet, GroupElement> canonicalize_patterns(const PatternSet& s);

/// |I_k(321)| from the prefix recurrence a_{n,m}. The table is built
/// bottom-up in O(kmax^2) additions; the _upto form returns k = 0..kmax.
BigCount count_321(int k);
std::vector<BigCount> count_321_upto(int kmax);

/// Full a_{n,m} table, rows n = 0..kmax and columns m = 1..kmax (column
/// m - 1 at index m - 1). Exposed for identity checks.
std::vector<std::vector<BigCount>> table_321(int kmax);

/// |I_k(123)|: 123-avoiding permutations with k inversions counted through
/// subdiagonal sequences with strictly decreasing non-diagonal entries,
/// minus the decomposable ones (sums of two decreasing permutations).
BigCount count_123(int k);
std::vector<BigCount> count_123_upto(int kmax);

/// Number of Gorenstein partitions of n through f(n, d), the count with
/// diagonal constant d + 1.
BigCount count_gorenstein(int n);
std::vector<BigCount> count_gorenstein_upto(int nmax);

/// Coefficients 0..kmax of a named series. Names: fountain_rectangle,
/// almost_triangular, almost_triangular_printed, diagonal_pascal,
/// pascal_zeroed, gorenstein_compositions. almost_triangular_printed is the
/// exponent (n-2)(n+1)/2 variant, kept so the verification suite can show
/// where it departs from the enumeration.
std::vector<BigCount> gf_coefficients(const std::string& name, int kmax);
const std::vector<std::string>& gf_names();

/// Names: all_ones, triangular_char, partition_count,
/// distinct_partition_count, divisor_count, odd_divisor_count,
/// almost_triangular_count, diagonal_pascal_binomial,
/// diagonal_pascal_binomial_printed. Every form gives 1 at k = 0.
BigCount closed_form(const std::string& name, int k);
const std::vector<std::string>& closed_form_names();

struct CountingMethod {
  enum class Tag {
    oracle,
    recurrence_321,
    recurrence_123,
    recurrence_gorenstein,
    gf_named,
    closed_form_named,
  };
  Tag tag = Tag::oracle;
  std::string parameter;  // series or closed-form name for the named tags

  std::string name() const;
  friend bool operator==(const CountingMethod&, const CountingMethod&) = default;
};

/// Fastest known method for s (after canonicalisation); oracle otherwise.
CountingMethod select_method(const PatternSet& s);

/// Counts I_k(s). When `method` is given it is used as is.
BigCount count(const PatternSet& s, int k,
               const std::optional<CountingMethod>& method = std::nullopt);
std::vector<BigCount> count_upto(const PatternSet& s, int kmax,
                                 const std::optional<CountingMethod>& method = std::nullopt);

struct ConjectureRow {
  int k;
  BigCount oracle;
  BigCount formula;
  bool match;
  /// The formula exactly as usually stated, when it differs from `formula`.
  std::optional<BigCount> printed;
};

/// Oracle counts against the conjectured formula for k = 0..kmax. Names:
/// c132_4321 (partitions whose parts all equal the smallest or the largest
/// part) and c321_1342. For c321_1342 the stated form k(k+1)/2 + 1 already
/// fails at k = 1 (I_1 = {21}); `formula` is the index-shifted C(k,2) + 1
/// and `printed` carries the stated value. Throws std::invalid_argument for
/// kmax above `kmax_limit`.
std::vector<ConjectureRow> conjecture_check(const std::string& name, int kmax,
                                            int kmax_limit = 14);

}  // namespace invperm
