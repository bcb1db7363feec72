#pragma once

#include <set>
#include <span>
#include <vector>

#include "invperm/objects.hpp"
#include "invperm/permutation.hpp"

namespace invperm {

// Every entry point that takes a permutation checks its domain
// (indecomposable and avoiding the relevant pattern) and throws
// std::invalid_argument otherwise.

/// I_k(132) -> partitions of k: the inversion table without trailing zeros.
Partition p132_to_partition(const Permutation& p);
/// Pads to the shortest subdiagonal length max(parts[i] + i) and decodes.
Permutation partition_to_p132(const Partition& q);

/// I_k(231) -> fountains with k coins, via the inversion table of the
/// reversed permutation read as per-diagonal removals.
Fountain p231_to_fountain(const Permutation& p);
Permutation fountain_to_p231(const Fountain& f);

/// I_k(321) -> parallelogram polyominoes with k cells, built from the
/// positions and values of the left-to-right maxima. The singleton
/// permutation maps to the empty polyomino.
ParallelogramPolyomino p321_to_polyomino(const Permutation& p);
Permutation polyomino_to_p321(const ParallelogramPolyomino& q);

/// Strips trailing zeros, then pads to the shortest subdiagonal length.
/// An all-zero input becomes {0}, the table of the singleton permutation.
std::vector<int> canonical_table(std::span<const int> seq);

/// True when the table padded with the fewest zeros decodes to a member of
/// some I_k(321): it carries no zeros beyond that padding, the first entry
/// is non-zero (unless the table is (0)), a positive entry x is followed by
/// at most x - 1 inner zeros, and the next positive entry after z zeros is
/// at least x - z.
bool is_valid_321_table(std::span<const int> seq);

/// Coin-path map from even fountains to inversion tables of I_k(321). One
/// entry per bottom coin counts the odd-row coins removed by the path that
/// starts there, followed by a single zero.
SubdiagonalSequence even_fountain_to_table(const CoinSet& c);
/// Inverse of even_fountain_to_table. Trailing zeros are ignored, so any
/// sequence whose canonical_table is valid is accepted.
CoinSet table_to_even_fountain(std::span<const int> table);

/// Composite maps between I_k(321) and even fountains of size k.
CoinSet p321_to_even_fountain(const Permutation& p);
Permutation even_fountain_to_p321(const CoinSet& c);

/// Gorenstein partition whose equal-part runs end at the partial sums of m.
/// The empty composition gives the empty partition; one-term compositions
/// are rejected.
Partition gorenstein_from_composition(const Composition& m);
Composition gorenstein_to_composition(const Partition& q);

/// Increasing entries i - 1, plus one where i (1-based) is chosen.
Partition almost_triangular_from_choice(int r, const std::set<int>& chosen);

}  // namespace invperm
