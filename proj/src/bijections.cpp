#include "invperm/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace invperm {

namespace {

const Permutation kPattern132{1, 3, 2};
const Permutation kPattern231{2, 3, 1};
const Permutation kPattern321{3, 2, 1};

void require_member(const Permutation& p, const Permutation& pattern) {
  if (p.empty()) {
    throw std::invalid_argument("the empty permutation is not in any I_k");
  }
  if (!is_indecomposable(p)) {
    throw std::invalid_argument("permutation is decomposable");
  }
  if (contains_pattern(p, pattern)) {
    std::string word;
    for (int v : pattern) word += std::to_string(v);
    throw std::invalid_argument("permutation contains " + word);
  }
}

}  // namespace

Partition p132_to_partition(const Permutation& p) {
  require_member(p, kPattern132);
  const auto table = inversion_table(p);
  std::vector<int> parts(table.entries().begin(), table.entries().end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Permutation partition_to_p132(const Partition& q) {
  return permutation_from_table(SubdiagonalSequence(canonical_table(q.parts())));
}

Fountain p231_to_fountain(const Permutation& p) {
  require_member(p, kPattern231);
  const auto table = inversion_table(reverse(p));
  const int base = p.size() - 1;
  return Fountain(base, std::vector<int>(table.entries().begin(),
                                         table.entries().begin() + base));
}

Permutation fountain_to_p231(const Fountain& f) {
  std::vector<int> table(f.missing().begin(), f.missing().end());
  table.push_back(0);
  return reverse(permutation_from_table(SubdiagonalSequence(std::move(table))));
}

ParallelogramPolyomino p321_to_polyomino(const Permutation& p) {
  require_member(p, kPattern321);
  if (p.size() == 1) return {};
  std::vector<int> lower;
  std::vector<int> upper;
  int running_max = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] <= running_max) continue;
    running_max = p[i];
    const int j = static_cast<int>(lower.size()) + 1;
    lower.push_back(i + 1 - j);
    upper.push_back(p[i] - j);
  }
  return ParallelogramPolyomino(std::move(lower), std::move(upper));
}

Permutation polyomino_to_p321(const ParallelogramPolyomino& q) {
  const int s = q.rows();
  if (s == 0) return Permutation{1};
  const int n = q.upper()[s - 1] + s;
  std::vector<int> word(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int j = 0; j < s; ++j) {
    const int pos = q.lower()[j] + j + 1;
    const int value = q.upper()[j] + j + 1;
    word[pos - 1] = value;
    used[value] = true;
  }
  int next = 1;
  for (int& slot : word) {
    if (slot != 0) continue;
    while (used[next]) ++next;
    slot = next++;
  }
  return Permutation(std::move(word));
}

std::vector<int> canonical_table(std::span<const int> seq) {
  auto last = seq.size();
  while (last > 0 && seq[last - 1] == 0) --last;
  if (last == 0) return {0};
  return pad_to_subdiagonal(seq.first(last));
}

bool is_valid_321_table(std::span<const int> seq) {
  for (int v : seq) {
    if (v < 0) throw std::invalid_argument("table entries must be non-negative");
  }
  const auto padded = pad_to_subdiagonal(seq);
  const auto canon = canonical_table(seq);
  if (!std::equal(padded.begin(), padded.end(), canon.begin(), canon.end())) return false;
  auto len = seq.size();
  while (len > 0 && seq[len - 1] == 0) --len;
  if (len == 0) return true;
  if (seq[0] == 0) return false;
  std::size_t i = 0;
  while (i < len) {
    std::size_t j = i + 1;
    while (j < len && seq[j] == 0) ++j;
    if (j == len) break;
    const int zeros = static_cast<int>(j - i - 1);
    if (zeros > seq[i] - 1) return false;
    if (seq[j] < seq[i] - zeros) return false;
    i = j;
  }
  return true;
}

SubdiagonalSequence even_fountain_to_table(const CoinSet& c) {
  std::set<Coin> coins = c.coins();
  const int width = c.bottom_width();
  std::vector<int> entries;
  entries.reserve(width + 1);
  for (int start = 1; start <= width; ++start) {
    if (!coins.contains(Coin{1, start})) {
      entries.push_back(0);
      continue;
    }
    int reds = 0;
    Coin cur{1, start};
    while (true) {
      coins.erase(cur);
      const bool red = cur.row % 2 == 1;
      if (red) ++reds;
      const Coin up{cur.row + 1, cur.pos};
      if (coins.contains(up)) {
        cur = up;
        continue;
      }
      if (red) break;
      // Inside a valid fountain the down-right coin of a black coin is
      // always present; a missing one ends the path.
      const Coin down{cur.row - 1, cur.pos + 1};
      if (!coins.contains(down)) break;
      cur = down;
    }
    entries.push_back(reds);
  }
  entries.push_back(0);
  return SubdiagonalSequence(std::move(entries));
}

CoinSet table_to_even_fountain(std::span<const int> table) {
  for (int v : table) {
    if (v < 0) throw std::invalid_argument("table entries must be non-negative");
  }
  const std::vector<int> canon = canonical_table(table);
  if (!is_valid_321_table(canon)) {
    throw std::invalid_argument("sequence is not an inversion table of I_k(321)");
  }
  const int width = static_cast<int>(canon.size()) - 1;

  struct Group {
    int value;
    int zeros;
  };
  std::vector<Group> groups;
  for (int i = 0; i < width; ++i) {
    if (canon[i] != 0) {
      groups.push_back({canon[i], 0});
    } else {
      ++groups.back().zeros;
    }
  }

  // Prepend one maximal path per group, right to left.
  std::set<Coin> coins;
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    std::set<Coin> shifted;
    for (const Coin& c : coins) shifted.insert(Coin{c.row, c.pos + g->zeros + 1});
    coins = std::move(shifted);

    auto place = [&](Coin c) {
      if (!coins.insert(c).second) {
        throw std::logic_error("coin path collides with an existing coin");
      }
    };
    Coin cur{1, 1};
    place(cur);
    for (int reds = 1; reds < g->value; ++reds) {
      place(Coin{cur.row + 1, cur.pos});
      if (coins.contains(Coin{cur.row + 1, cur.pos + 1})) {
        cur = Coin{cur.row + 2, cur.pos};
      } else {
        cur = Coin{cur.row, cur.pos + 1};
      }
      place(cur);
    }
    for (int p = 1; p <= g->zeros + 1; ++p) {
      if (!coins.contains(Coin{1, p})) {
        throw std::logic_error("coin path left a gap in the bottom row");
      }
    }
  }

  CoinSet result(std::move(coins));
  const auto round_trip = even_fountain_to_table(result);
  if (!std::equal(round_trip.entries().begin(), round_trip.entries().end(),
                  canon.begin(), canon.end())) {
    throw std::logic_error("coin-path inverse failed its round-trip check");
  }
  return result;
}

CoinSet p321_to_even_fountain(const Permutation& p) {
  require_member(p, kPattern321);
  return table_to_even_fountain(inversion_table(p).entries());
}

Permutation even_fountain_to_p321(const CoinSet& c) {
  return permutation_from_table(even_fountain_to_table(c));
}

Partition gorenstein_from_composition(const Composition& m) {
  if (m.size() == 1) {
    throw std::invalid_argument("a one-term composition has no Gorenstein partition");
  }
  const int s = m.total();
  std::vector<int> parts;
  int end = 0;
  for (int term : m.terms()) {
    end += term;
    // run of `term` equal parts ending at index `end`, where part + index = s
    for (int i = 0; i < term; ++i) parts.push_back(s - end);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Composition gorenstein_to_composition(const Partition& q) {
  if (q.empty()) return {};
  const auto constant = diagonal_constant(q);
  if (!constant) throw std::invalid_argument("partition is not Gorenstein");
  std::vector<int> terms;
  int previous = 0;
  for (int i = 0; i < q.size(); ++i) {
    const int next = i + 1 < q.size() ? q[i + 1] : 0;
    if (q[i] == next) continue;
    terms.push_back(i + 1 - previous);
    previous = i + 1;
  }
  terms.push_back(*constant - previous);
  return Composition(std::move(terms));
}

Partition almost_triangular_from_choice(int r, const std::set<int>& chosen) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (chosen.empty()) throw std::invalid_argument("choose at least one entry");
  if (*chosen.begin() < 1 || *chosen.rbegin() > r) {
    throw std::invalid_argument("chosen entries must lie in 1..r");
  }
  std::vector<int> parts;
  for (int i = r; i >= 1; --i) {
    const int value = i - 1 + (chosen.contains(i) ? 1 : 0);
    if (value > 0) parts.push_back(value);
  }
  return Partition(std::move(parts));
}

}  // namespace invperm
