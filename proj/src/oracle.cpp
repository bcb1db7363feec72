#include "invperm/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace invperm {

namespace {

using Clock = std::chrono::steady_clock;

class BudgetGuard {
 public:
  explicit BudgetGuard(const EnumerationBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  void check_k(int k) const {
    if (k > budget_.kmax) {
      throw BudgetExceeded("k = " + std::to_string(k) + " exceeds the budget kmax = " +
                           std::to_string(budget_.kmax));
    }
  }

  void on_item() {
    if (++items_ > budget_.max_items) {
      throw BudgetExceeded("enumeration exceeded " +
                           std::to_string(budget_.max_items) + " items");
    }
  }

  void on_node() {
    if ((++nodes_ & 0xFFFF) != 0) return;
    const std::chrono::duration<double> elapsed = Clock::now() - start_;
    if (elapsed.count() > budget_.max_seconds) {
      throw BudgetExceeded("enumeration exceeded its time budget");
    }
  }

 private:
  EnumerationBudget budget_;
  Clock::time_point start_;
  std::uint64_t items_ = 0;
  std::uint64_t nodes_ = 0;
};

bool is_monotone(const Permutation& p, bool increasing) {
  for (int i = 1; i < p.size(); ++i) {
    if ((p[i] > p[i - 1]) != increasing) return false;
  }
  return true;
}

// Is there an occurrence of `pattern` whose last letter is word.back()?
bool occurrence_ending_at_last(const std::vector<int>& word,
                               const Permutation& pattern,
                               std::vector<int>& chosen, int start) {
  const int m = pattern.size();
  const int depth = static_cast<int>(chosen.size());
  const int last = static_cast<int>(word.size()) - 1;
  if (depth == m - 1) {
    for (int d = 0; d < depth; ++d) {
      if ((word[chosen[d]] < word[last]) != (pattern[d] < pattern[m - 1])) {
        return false;
      }
    }
    return true;
  }
  for (int pos = start; pos + (m - 1 - depth) <= last; ++pos) {
    bool consistent = true;
    for (int d = 0; d < depth && consistent; ++d) {
      consistent = (word[chosen[d]] < word[pos]) == (pattern[d] < pattern[depth]);
    }
    if (consistent) {
      consistent = (word[pos] < word[last]) == (pattern[depth] < pattern[m - 1]);
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    if (occurrence_ending_at_last(word, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

struct IkSearch {
  int n;
  const PatternSet* patterns;  // null: no avoidance, no indecomposability
  const PermutationVisitor* visit;
  BudgetGuard* guard;
  std::vector<int> word;
  std::vector<int> remaining;
  std::vector<int> scratch;

  void run(int pos, int budget_left, int prefix_max) {
    if (guard) guard->on_node();
    if (pos == n) {
      if (guard) guard->on_item();
      (*visit)(Permutation::unchecked(word));
      return;
    }
    const int free_slots = n - 1 - pos;
    const int max_rest = free_slots * (free_slots - 1) / 2;
    const int lo = std::max(0, budget_left - max_rest);
    const int hi = std::min(free_slots, budget_left);
    for (int digit = lo; digit <= hi; ++digit) {
      const int value = remaining[digit];
      const int new_max = std::max(prefix_max, value);
      if (patterns && pos + 1 < n && new_max == pos + 1) continue;
      word.push_back(value);
      bool ok = true;
      if (patterns) {
        for (const Permutation& t : patterns->patterns()) {
          if (t.size() > static_cast<int>(word.size())) continue;
          scratch.clear();
          if (occurrence_ending_at_last(word, t, scratch, 0)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        remaining.erase(remaining.begin() + digit);
        run(pos + 1, budget_left - digit, new_max);
        remaining.insert(remaining.begin() + digit, value);
      }
      word.pop_back();
    }
  }
};

}  // namespace

void gen_by_inversions(int k, int n, const PermutationVisitor& visit) {
  if (n < 0 || k < 0 || static_cast<long>(k) > static_cast<long>(n) * (n - 1) / 2) return;
  IkSearch search{n, nullptr, &visit, nullptr, {}, {}, {}};
  search.remaining.resize(n);
  std::iota(search.remaining.begin(), search.remaining.end(), 1);
  search.run(0, k, 0);
}

std::vector<Permutation> gen_by_inversions(int k, int n) {
  std::vector<Permutation> out;
  gen_by_inversions(k, n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

int max_length(int k, const PatternSet& s) {
  int cap = k + 1;
  int shortest_increasing = 0;
  int shortest_decreasing = 0;
  for (const Permutation& t : s.patterns()) {
    if (is_monotone(t, true) &&
        (shortest_increasing == 0 || t.size() < shortest_increasing)) {
      shortest_increasing = t.size();
    }
    if (is_monotone(t, false) &&
        (shortest_decreasing == 0 || t.size() < shortest_decreasing)) {
      shortest_decreasing = t.size();
    }
  }
  if (shortest_increasing > 0 && shortest_decreasing > 0) {
    cap = std::min(cap, (shortest_increasing - 1) * (shortest_decreasing - 1));
  }
  return cap;
}

void for_each_Ik(int k, const PatternSet& s, const PermutationVisitor& visit,
                 const EnumerationBudget& budget) {
  BudgetGuard guard(budget);
  guard.check_k(k);
  if (k < 0) return;
  const int cap = max_length(k, s);
  for (int n = 1; n <= cap; ++n) {
    if (static_cast<long>(k) > static_cast<long>(n) * (n - 1) / 2) continue;
    IkSearch search{n, &s, &visit, &guard, {}, {}, {}};
    search.remaining.resize(n);
    std::iota(search.remaining.begin(), search.remaining.end(), 1);
    search.run(0, k, 0);
  }
}

std::vector<Permutation> enumerate_Ik(int k, const PatternSet& s,
                                      const EnumerationBudget& budget) {
  std::vector<Permutation> out;
  for_each_Ik(k, s, [&](const Permutation& p) { out.push_back(p); }, budget);
  return out;
}

std::uint64_t oracle_count(int k, const PatternSet& s,
                           const EnumerationBudget& budget) {
  std::uint64_t count = 0;
  for_each_Ik(k, s, [&](const Permutation&) { ++count; }, budget);
  return count;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::partitions: return "partitions";
    case Family::distinct_partitions: return "distinct_partitions";
    case Family::equal_partitions: return "equal_partitions";
    case Family::gorenstein: return "gorenstein";
    case Family::almost_triangular: return "almost_triangular";
    case Family::fountains: return "fountains";
    case Family::even_fountains: return "even_fountains";
    case Family::polyominoes: return "polyominoes";
  }
  return "?";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {
      Family::partitions,       Family::distinct_partitions,
      Family::equal_partitions, Family::gorenstein,
      Family::almost_triangular, Family::fountains,
      Family::even_fountains,   Family::polyominoes};
  return families;
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

void partitions_rec(int left, int max_part, std::vector<int>& parts,
                    std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(parts);
    return;
  }
  for (int part = std::min(left, max_part); part >= 1; --part) {
    parts.push_back(part);
    partitions_rec(left - part, part, parts, out);
    parts.pop_back();
  }
}

// Row-by-row placement. `row` lists the occupied positions of the current
// top row; the next row may use any position p whose two supports p, p + 1
// are both in `row`.
struct FountainSearch {
  std::function<void(const std::set<Coin>&)> emit;
  std::function<bool(const std::set<Coin>&)> prune;
  std::set<Coin> coins;

  void next_row(int row_index, const std::vector<int>& row) {
    if (prune && prune(coins)) return;
    emit(coins);
    std::vector<int> slots;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      if (row[i + 1] == row[i] + 1) slots.push_back(row[i]);
    }
    // non-empty subsets of slots, in increasing bitmask order
    const std::size_t count = slots.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
      std::vector<int> chosen;
      for (std::size_t i = 0; i < count; ++i) {
        if (mask >> i & 1) chosen.push_back(slots[i]);
      }
      for (int p : chosen) coins.insert(Coin{row_index + 1, p});
      next_row(row_index + 1, chosen);
      for (int p : chosen) coins.erase(Coin{row_index + 1, p});
    }
  }
};

}  // namespace

std::vector<Partition> enumerate_partitions(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> parts;
  partitions_rec(k, k, parts, out);
  return out;
}

std::vector<Fountain> enumerate_fountains(int k) {
  std::vector<Fountain> out;
  if (k < 0) return out;
  if (k == 0) return {Fountain{}};
  for (int base = 1; base <= k; ++base) {
    FountainSearch search;
    search.prune = [&](const std::set<Coin>& c) {
      return static_cast<int>(c.size()) > k;
    };
    search.emit = [&](const std::set<Coin>& c) {
      if (static_cast<int>(c.size()) == k) {
        out.push_back(coinset_to_fountain(CoinSet(c)));
      }
    };
    std::vector<int> bottom(base);
    std::iota(bottom.begin(), bottom.end(), 1);
    for (int p : bottom) search.coins.insert(Coin{1, p});
    search.next_row(1, bottom);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoinSet> enumerate_even_fountains(int k) {
  std::vector<CoinSet> out;
  if (k < 0) return out;
  if (k == 0) return {CoinSet{}};
  for (int base = 1; base <= k; ++base) {
    FountainSearch search;
    search.prune = [&](const std::set<Coin>& c) {
      return even_size(CoinSet(c)) > k;
    };
    search.emit = [&](const std::set<Coin>& c) {
      CoinSet set(c);
      if (even_size(set) == k) out.push_back(std::move(set));
    };
    std::vector<int> bottom(base);
    std::iota(bottom.begin(), bottom.end(), 1);
    for (int p : bottom) search.coins.insert(Coin{1, p});
    search.next_row(1, bottom);
  }
  std::sort(out.begin(), out.end(), [](const CoinSet& a, const CoinSet& b) {
    return coinset_to_fountain(a) < coinset_to_fountain(b);
  });
  return out;
}

namespace {

void polyomino_rec(int left, std::vector<int>& lower, std::vector<int>& upper,
                   std::vector<ParallelogramPolyomino>& out) {
  if (left == 0) {
    out.emplace_back(lower, upper);
    return;
  }
  const int l_prev = lower.back();
  const int r_prev = upper.back();
  for (int l = l_prev; l < r_prev; ++l) {
    for (int r = std::max(r_prev, l + 1); r - l <= left; ++r) {
      lower.push_back(l);
      upper.push_back(r);
      polyomino_rec(left - (r - l), lower, upper, out);
      lower.pop_back();
      upper.pop_back();
    }
  }
}

}  // namespace

std::vector<ParallelogramPolyomino> enumerate_polyominoes(int k) {
  std::vector<ParallelogramPolyomino> out;
  if (k < 0) return out;
  if (k == 0) return {ParallelogramPolyomino{}};
  for (int r = 1; r <= k; ++r) {
    std::vector<int> lower{0};
    std::vector<int> upper{r};
    polyomino_rec(k - r, lower, upper, out);
  }
  return out;
}

std::vector<FamilyObject> enumerate_objects(Family family, int k,
                                            const EnumerationBudget& budget) {
  BudgetGuard guard(budget);
  guard.check_k(k);
  std::vector<FamilyObject> out;
  auto take_partitions = [&](auto&& keep) {
    for (auto& p : enumerate_partitions(k)) {
      if (keep(p)) {
        guard.on_item();
        out.emplace_back(std::move(p));
      }
    }
  };
  switch (family) {
    case Family::partitions:
      take_partitions([](const Partition&) { return true; });
      break;
    case Family::distinct_partitions:
      take_partitions(has_distinct_parts);
      break;
    case Family::equal_partitions:
      take_partitions(has_equal_parts);
      break;
    case Family::gorenstein:
      take_partitions(is_gorenstein);
      break;
    case Family::almost_triangular:
      take_partitions(is_almost_triangular);
      break;
    case Family::fountains:
      for (auto& f : enumerate_fountains(k)) {
        guard.on_item();
        out.emplace_back(std::move(f));
      }
      break;
    case Family::even_fountains:
      for (auto& c : enumerate_even_fountains(k)) {
        guard.on_item();
        out.emplace_back(std::move(c));
      }
      break;
    case Family::polyominoes:
      for (auto& q : enumerate_polyominoes(k)) {
        guard.on_item();
        out.emplace_back(std::move(q));
      }
      break;
  }
  return out;
}

}  // namespace invperm
