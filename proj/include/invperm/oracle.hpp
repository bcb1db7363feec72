#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "invperm/objects.hpp"
#include "invperm/permutation.hpp"

namespace invperm {

/// Limits for exhaustive enumeration. Exceeding any of them throws
/// BudgetExceeded; nothing partial is returned.
struct EnumerationBudget {
  int kmax = 16;
  std::uint64_t max_items = 50'000'000;
  double max_seconds = 900.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PermutationVisitor = std::function<void(const Permutation&)>;

/// Every permutation of length n with k inversions, once each, in
/// lexicographic order (backtracking over inversion tables summing to k).
void gen_by_inversions(int k, int n, const PermutationVisitor& visit);
std::vector<Permutation> gen_by_inversions(int k, int n);

/// Streams I_k(s): indecomposable permutations with k inversions avoiding
/// every pattern in s, ordered by length and then lexicographically.
/// Prefixes that are already decomposable or already contain a pattern are
/// pruned; lengths are capped at k + 1 and, when s holds both a monotone
/// increasing and a monotone decreasing pattern, at the Erdos-Szekeres bound.
void for_each_Ik(int k, const PatternSet& s, const PermutationVisitor& visit,
                 const EnumerationBudget& budget = {});
std::vector<Permutation> enumerate_Ik(int k, const PatternSet& s,
                                      const EnumerationBudget& budget = {});
std::uint64_t oracle_count(int k, const PatternSet& s,
                           const EnumerationBudget& budget = {});

/// Largest length a member of I_k(s) can have.
int max_length(int k, const PatternSet& s);

enum class Family {
  partitions,
  distinct_partitions,
  equal_partitions,
  gorenstein,
  almost_triangular,
  fountains,
  even_fountains,
  polyominoes,
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
const std::vector<Family>& all_families();

using FamilyObject =
    std::variant<Partition, Fountain, CoinSet, ParallelogramPolyomino>;

/// All partitions of k, largest first part first.
std::vector<Partition> enumerate_partitions(int k);
/// Fountains with k coins, found by placing coins row by row.
std::vector<Fountain> enumerate_fountains(int k);
/// Fountains with k coins on odd rows; bottom width is at most k.
std::vector<CoinSet> enumerate_even_fountains(int k);
std::vector<ParallelogramPolyomino> enumerate_polyominoes(int k);

std::vector<FamilyObject> enumerate_objects(Family family, int k,
                                            const EnumerationBudget& budget = {});

}  // namespace invperm
