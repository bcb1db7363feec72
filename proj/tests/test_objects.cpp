#include <doctest.h>

#include <stdexcept>

#include "invperm/objects.hpp"
#include "invperm/oracle.hpp"

using namespace invperm;

namespace {

// Two-supports rule and full bottom row, checked coin by coin.
bool naive_fountain(const CoinSet& c) {
  int bottom = 0;
  for (const Coin& x : c.coins()) {
    if (x.row == 1) {
      ++bottom;
    } else if (!c.contains(x.row - 1, x.pos) || !c.contains(x.row - 1, x.pos + 1)) {
      return false;
    }
  }
  for (int p = 1; p <= bottom; ++p)
    if (!c.contains(1, p)) return false;
  return true;
}

int odd_row_coins(const CoinSet& c) {
  int n = 0;
  for (const Coin& x : c.coins()) n += x.row % 2;
  return n;
}

}  // namespace

TEST_CASE("partitions and compositions validate") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_EQ(Partition({4, 2, 1}).sum(), 7);
  CHECK_EQ(Partition().sum(), 0);
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
  CHECK_EQ(Composition({3, 1, 2}).total(), 6);
}

TEST_CASE("gorenstein predicate") {
  CHECK(is_gorenstein(Partition({7, 4, 4, 4, 2, 2, 1})));
  CHECK_EQ(diagonal_constant(Partition({7, 4, 4, 4, 2, 2, 1})), 8);
  CHECK_EQ(Partition({7, 4, 4, 4, 2, 2, 1}).sum(), 24);
  for (int s = 2; s <= 8; ++s) {
    std::vector<int> parts;
    for (int v = s - 1; v >= 1; --v) parts.push_back(v);
    CHECK(is_gorenstein(Partition(parts)));
    CHECK_EQ(diagonal_constant(Partition(parts)), s);
  }
  CHECK_FALSE(is_gorenstein(Partition({3, 1})));
  CHECK_FALSE(diagonal_constant(Partition({3, 1})).has_value());
  CHECK_FALSE(diagonal_constant(Partition()).has_value());
}

TEST_CASE("gorenstein partitions peel into gorenstein partitions") {
  for (int n = 1; n <= 14; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      if (!is_gorenstein(p)) continue;
      int run = 1;
      while (run < p.size() && p[run] == p[0]) ++run;
      std::vector<int> rest(p.parts().begin() + run, p.parts().end());
      if (rest.empty()) continue;
      const Partition q(rest);
      REQUIRE(is_gorenstein(q));
      CHECK_EQ(*diagonal_constant(q), *diagonal_constant(p) - run);
    }
  }
}

TEST_CASE("almost triangular predicate") {
  CHECK(is_almost_triangular(Partition({2, 1})));
  CHECK(is_almost_triangular(Partition({1})));
  CHECK(is_almost_triangular(Partition({2, 2})));
  CHECK(is_almost_triangular(Partition({2})));
  CHECK_FALSE(is_almost_triangular(Partition({3})));
  CHECK(is_almost_triangular(Partition({1, 1})));
  CHECK_FALSE(is_almost_triangular(Partition({2, 2, 2})));
  CHECK(is_almost_triangular(Partition()));
}

TEST_CASE("distinct and equal parts") {
  CHECK(has_distinct_parts(Partition({4, 2, 1})));
  CHECK_FALSE(has_distinct_parts(Partition({2, 2})));
  CHECK(has_equal_parts(Partition({3, 3, 3})));
  CHECK_FALSE(has_equal_parts(Partition({3, 1})));
}

TEST_CASE("fountain encodings") {
  const CoinSet two = fountain_to_coinset(Fountain(2, {1, 0}));
  CHECK_EQ(two, CoinSet({Coin{1, 1}, Coin{1, 2}}));
  CHECK_EQ(fountain_to_coinset(Fountain(0, {})).size(), 0);
  CHECK_THROWS_AS(Fountain(5, {5, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Fountain(3, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CoinSet({Coin{1, 1}, Coin{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoinSet({Coin{1, 2}}), std::invalid_argument);
  CHECK_EQ(Fountain(3, {0, 0, 0}).coin_count(), 6);
}

TEST_CASE("coin-set view reads missing counts per diagonal") {
  const CoinSet c({Coin{1, 1}, Coin{1, 2}, Coin{1, 3}, Coin{2, 2}});
  CHECK_EQ(coinset_to_fountain(c), Fountain(3, {2, 0, 0}));
  CHECK_EQ(fountain_to_coinset(Fountain(3, {2, 0, 0})), c);
}

TEST_CASE("coin-path figure fountain") {
  const Fountain f(8, {5, 3, 3, 3, 3, 2, 0, 0});
  CHECK_EQ(even_size(f), 11);
  CHECK_EQ(even_size(fountain_to_coinset(f)), 11);
  CHECK_EQ(even_size(Fountain(4, {3, 2, 1, 0})), 4);
  CHECK_EQ(even_size(Fountain()), 0);
}

TEST_CASE("every fountain round trips through its coin set") {
  for (int k = 0; k <= 10; ++k) {
    for (const Fountain& f : enumerate_fountains(k)) {
      const CoinSet c = fountain_to_coinset(f);
      REQUIRE(naive_fountain(c));
      REQUIRE_EQ(c.size(), k);
      REQUIRE_EQ(even_size(f), odd_row_coins(c));
      REQUIRE_EQ(coinset_to_fountain(c), f);
    }
  }
}

TEST_CASE("polyominoes") {
  const ParallelogramPolyomino fig({0, 1, 1, 3, 3}, {3, 4, 4, 4, 6});
  CHECK_EQ(polyomino_cells(fig), 13);
  CHECK_EQ(polyomino_cells(ParallelogramPolyomino({0}, {1})), 1);
  CHECK_EQ(polyomino_cells(ParallelogramPolyomino({0, 0}, {1, 1})), 2);
  CHECK_EQ(polyomino_cells(ParallelogramPolyomino()), 0);
  CHECK_THROWS_AS(ParallelogramPolyomino({0, 2}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ParallelogramPolyomino({1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(ParallelogramPolyomino({0, 0}, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ParallelogramPolyomino({0}, {0}), std::invalid_argument);
}
