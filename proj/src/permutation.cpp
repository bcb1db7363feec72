#include "invperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invperm {

namespace {

void validate_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v));
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : values_(std::move(word)) {
  validate_word(values_);
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::vector<int>(word)) {}

Permutation Permutation::unchecked(std::vector<int> word) {
  Permutation p;
  p.values_ = std::move(word);
  return p;
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return unchecked(std::move(w));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return unchecked(std::move(w));
}

SubdiagonalSequence::SubdiagonalSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (entries_[i] < 0 || entries_[i] > n - 1 - i) {
      throw std::invalid_argument(
          "entry " + std::to_string(i + 1) + " = " +
          std::to_string(entries_[i]) + " is not within 0.." +
          std::to_string(n - 1 - i));
    }
  }
}

SubdiagonalSequence::SubdiagonalSequence(std::initializer_list<int> entries)
    : SubdiagonalSequence(std::vector<int>(entries)) {}

std::int64_t SubdiagonalSequence::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("empty pattern set");
  for (const auto& p : patterns_) {
    if (p.size() < 1 || p.size() > 4) {
      throw std::invalid_argument("patterns must have length 1..4");
    }
  }
  std::sort(patterns_.begin(), patterns_.end());
  if (std::adjacent_find(patterns_.begin(), patterns_.end()) !=
      patterns_.end()) {
    throw std::invalid_argument("duplicate pattern in set");
  }
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

Permutation make_permutation(std::span<const int> word) {
  return Permutation(std::vector<int>(word.begin(), word.end()));
}

std::int64_t inv_count(const Permutation& p) {
  std::int64_t count = 0;
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

SubdiagonalSequence inversion_table(const Permutation& p) {
  const int n = p.size();
  std::vector<int> table(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++table[i];
  return SubdiagonalSequence(std::move(table));
}

Permutation permutation_from_table(const SubdiagonalSequence& table) {
  const int n = table.size();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto it = remaining.begin() + table[i];
    word.push_back(*it);
    remaining.erase(it);
  }
  return Permutation::unchecked(std::move(word));
}

std::vector<int> pad_to_subdiagonal(std::span<const int> seq) {
  int n = static_cast<int>(seq.size());
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    if (seq[i] < 0) throw std::invalid_argument("negative table entry");
    n = std::max(n, seq[i] + i + 1);
  }
  std::vector<int> out(seq.begin(), seq.end());
  out.resize(n, 0);
  return out;
}

namespace {

// Extends a partial occurrence: `chosen` holds positions in p matched to
// pattern[0..depth).
bool extend_occurrence(const Permutation& p, const Permutation& pattern,
                       std::vector<int>& chosen, int start) {
  const int depth = static_cast<int>(chosen.size());
  if (depth == pattern.size()) return true;
  const int need = pattern.size() - depth;
  for (int pos = start; pos + need <= p.size(); ++pos) {
    bool consistent = true;
    for (int d = 0; d < depth && consistent; ++d) {
      consistent = (p[chosen[d]] < p[pos]) == (pattern[d] < pattern[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    if (extend_occurrence(p, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return extend_occurrence(p, pattern, chosen, 0);
}

bool avoids_all(const Permutation& p, const PatternSet& patterns) {
  return std::none_of(
      patterns.patterns().begin(), patterns.patterns().end(),
      [&](const Permutation& t) { return contains_pattern(p, t); });
}

std::vector<Permutation> components(const Permutation& p) {
  std::vector<Permutation> out;
  int start = 0;
  int prefix_max = 0;
  for (int j = 0; j < p.size(); ++j) {
    prefix_max = std::max(prefix_max, p[j]);
    // prefix 1..j+1 holds exactly {1..j+1}
    if (prefix_max == j + 1) {
      std::vector<int> word;
      for (int i = start; i <= j; ++i) word.push_back(p[i] - start);
      out.push_back(Permutation::unchecked(std::move(word)));
      start = j + 1;
    }
  }
  return out;
}

bool is_indecomposable(const Permutation& p) {
  int prefix_max = 0;
  for (int j = 0; j + 1 < p.size(); ++j) {
    prefix_max = std::max(prefix_max, p[j]);
    if (prefix_max == j + 1) return false;
  }
  return true;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> word(a.begin(), a.end());
  for (int v : b) word.push_back(v + a.size());
  return Permutation::unchecked(std::move(word));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> word;
  for (int v : a) word.push_back(v + b.size());
  for (int v : b) word.push_back(v);
  return Permutation::unchecked(std::move(word));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> word(p.begin(), p.end());
  std::reverse(word.begin(), word.end());
  return Permutation::unchecked(std::move(word));
}

Permutation complement(const Permutation& p) {
  std::vector<int> word;
  for (int v : p) word.push_back(p.size() + 1 - v);
  return Permutation::unchecked(std::move(word));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> word(p.size());
  for (int i = 0; i < p.size(); ++i) word[p[i] - 1] = i + 1;
  return Permutation::unchecked(std::move(word));
}

Permutation reverse_complement(const Permutation& p) {
  return complement(reverse(p));
}

Permutation apply_symmetry(const Permutation& p, Symmetry which) {
  switch (which) {
    case Symmetry::reverse: return reverse(p);
    case Symmetry::complement: return complement(p);
    case Symmetry::inverse: return inverse(p);
    case Symmetry::reverse_complement: return reverse_complement(p);
  }
  throw std::logic_error("unknown symmetry");
}

std::string symmetry_name(Symmetry which) {
  switch (which) {
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::inverse: return "inverse";
    case Symmetry::reverse_complement: return "reverse_complement";
  }
  return "?";
}

}  // namespace invperm
