#include "invperm/objects.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace invperm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::int64_t Partition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Composition::Composition(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int t : terms_) {
    if (t <= 0) throw std::invalid_argument("composition terms must be positive");
  }
}

Composition::Composition(std::initializer_list<int> terms)
    : Composition(std::vector<int>(terms)) {}

int Composition::total() const noexcept {
  return std::accumulate(terms_.begin(), terms_.end(), 0);
}

std::optional<int> diagonal_constant(const Partition& p) {
  std::optional<int> constant;
  for (int i = 0; i < p.size(); ++i) {
    const int next = i + 1 < p.size() ? p[i + 1] : 0;
    if (p[i] == next) continue;
    const int value = p[i] + i + 1;
    if (constant && *constant != value) return std::nullopt;
    constant = value;
  }
  return constant;
}

bool is_gorenstein(const Partition& p) {
  return p.empty() || diagonal_constant(p).has_value();
}

namespace {

// `increasing` holds the entries in increasing order, position 1 first.
bool almost_triangular_sequence(const std::vector<int>& increasing) {
  bool some_full = false;
  for (std::size_t i = 0; i < increasing.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (increasing[i] == pos) {
      some_full = true;
    } else if (increasing[i] != pos - 1) {
      return false;
    }
  }
  return some_full;
}

}  // namespace

bool is_almost_triangular(const Partition& p) {
  if (p.empty()) return true;
  std::vector<int> increasing(p.parts().rbegin(), p.parts().rend());
  if (almost_triangular_sequence(increasing)) return true;
  increasing.insert(increasing.begin(), 0);
  return almost_triangular_sequence(increasing);
}

bool has_distinct_parts(const Partition& p) {
  return std::adjacent_find(p.parts().begin(), p.parts().end()) ==
         p.parts().end();
}

bool has_equal_parts(const Partition& p) {
  return p.empty() || p[0] == p[p.size() - 1];
}

CoinSet::CoinSet(std::set<Coin> coins) : coins_(std::move(coins)) {
  int width = 0;
  for (const Coin& c : coins_) {
    if (c.row < 1 || c.pos < 1) {
      throw std::invalid_argument("coin coordinates must be positive");
    }
    if (c.row == 1) ++width;
  }
  for (const Coin& c : coins_) {
    if (c.row == 1) {
      if (c.pos > width) {
        throw std::invalid_argument("bottom row must be contiguous from position 1");
      }
      continue;
    }
    if (!contains(c.row - 1, c.pos)) {
      throw std::invalid_argument(
          "diagonal " + std::to_string(c.pos) + " has a gap below row " +
          std::to_string(c.row));
    }
    if (!contains(c.row - 1, c.pos + 1)) {
      throw std::invalid_argument(
          "diagonal " + std::to_string(c.pos) + " is taller than diagonal " +
          std::to_string(c.pos + 1) + " allows: coin (" +
          std::to_string(c.row) + "," + std::to_string(c.pos) +
          ") lacks its right support");
    }
  }
}

int CoinSet::bottom_width() const noexcept {
  int width = 0;
  for (const Coin& c : coins_) {
    if (c.row == 1) ++width;
  }
  return width;
}

Fountain::Fountain(int base, std::vector<int> missing)
    : base_(base), missing_(std::move(missing)) {
  if (base_ < 0) throw std::invalid_argument("fountain base must be non-negative");
  if (static_cast<int>(missing_.size()) != base_) {
    throw std::invalid_argument("fountain needs one missing count per diagonal");
  }
  for (int i = 0; i < base_; ++i) {
    if (missing_[i] < 0 || missing_[i] > base_ - 1 - i) {
      throw std::invalid_argument(
          "missing_" + std::to_string(i + 1) + " = " +
          std::to_string(missing_[i]) + " exceeds b-" + std::to_string(i + 1) +
          " = " + std::to_string(base_ - 1 - i));
    }
    if (i > 0 && missing_[i] > missing_[i - 1]) {
      throw std::invalid_argument("missing counts must be weakly decreasing");
    }
  }
}

std::int64_t Fountain::coin_count() const noexcept {
  const std::int64_t full = static_cast<std::int64_t>(base_) * (base_ + 1) / 2;
  return full - std::accumulate(missing_.begin(), missing_.end(), std::int64_t{0});
}

CoinSet fountain_to_coinset(const Fountain& f) {
  std::set<Coin> coins;
  for (int i = 0; i < f.base(); ++i) {
    for (int row = 1; row <= f.height(i); ++row) coins.insert(Coin{row, i + 1});
  }
  return CoinSet(std::move(coins));
}

Fountain coinset_to_fountain(const CoinSet& c) {
  const int base = c.bottom_width();
  std::vector<int> heights(base, 0);
  for (const Coin& coin : c.coins()) {
    heights[coin.pos - 1] = std::max(heights[coin.pos - 1], coin.row);
  }
  std::vector<int> missing(base);
  for (int i = 0; i < base; ++i) {
    missing[i] = base - i - heights[i];
    if (i > 0 && missing[i] > missing[i - 1]) {
      throw std::invalid_argument(
          "diagonal " + std::to_string(i + 1) +
          " is missing more coins than diagonal " + std::to_string(i));
    }
  }
  return Fountain(base, std::move(missing));
}

int even_size(const CoinSet& c) {
  return static_cast<int>(std::count_if(
      c.coins().begin(), c.coins().end(),
      [](const Coin& coin) { return coin.row % 2 == 1; }));
}

int even_size(const Fountain& f) {
  int total = 0;
  for (int i = 0; i < f.base(); ++i) total += (f.height(i) + 1) / 2;
  return total;
}

ParallelogramPolyomino::ParallelogramPolyomino(std::vector<int> lower,
                                               std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("polyomino boundaries differ in length");
  }
  const std::size_t s = lower_.size();
  if (s > 0 && lower_[0] != 0) throw std::invalid_argument("polyomino needs l_1 = 0");
  for (std::size_t i = 0; i < s; ++i) {
    const std::string row = std::to_string(i + 1);
    if (lower_[i] >= upper_[i]) {
      throw std::invalid_argument("polyomino needs l_" + row + " < r_" + row);
    }
    if (i + 1 < s) {
      if (lower_[i + 1] < lower_[i] || upper_[i + 1] < upper_[i]) {
        throw std::invalid_argument("polyomino boundaries must be weakly increasing");
      }
      if (lower_[i + 1] >= upper_[i]) {
        throw std::invalid_argument("polyomino needs l_" + std::to_string(i + 2) +
                                    " < r_" + row);
      }
    }
  }
}

std::int64_t polyomino_cells(const ParallelogramPolyomino& p) {
  std::int64_t cells = 0;
  for (int i = 0; i < p.rows(); ++i) cells += p.upper()[i] - p.lower()[i];
  return cells;
}

}  // namespace invperm
