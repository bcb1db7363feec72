#include <doctest.h>

#include <stdexcept>

#include "invperm/text.hpp"

using namespace invperm;

TEST_CASE("permutation text") {
  CHECK_EQ(parse_permutation("3 1 2"), Permutation({3, 1, 2}));
  CHECK_EQ(parse_permutation("3,1,2"), Permutation({3, 1, 2}));
  CHECK_EQ(parse_permutation("312"), Permutation({3, 1, 2}));
  CHECK_EQ(parse_permutation(" 10 1 2 3 4 5 6 7 8 9 "),
           Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK_EQ(format_permutation(Permutation({3, 1, 2})), "3 1 2");
  CHECK_THROWS_AS(parse_permutation("3 x 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("3 3"), std::invalid_argument);
}

TEST_CASE("pattern set text") {
  const PatternSet s = parse_pattern_set("231,123");
  CHECK_EQ(s.size(), 2);
  CHECK_EQ(format_pattern_set(s), "123,231");
  CHECK_EQ(parse_pattern_set(format_pattern_set(s)), s);
  CHECK_THROWS_AS(parse_pattern_set("123,,231"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern_set("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pattern_set("12345"), std::invalid_argument);
}

TEST_CASE("partition and composition text") {
  CHECK_EQ(parse_partition("4,2,1"), Partition({4, 2, 1}));
  CHECK_EQ(parse_partition("()"), Partition());
  CHECK_EQ(parse_partition(""), Partition());
  CHECK_EQ(format_partition(Partition()), "()");
  CHECK_EQ(format_partition(Partition({4, 2, 1})), "4,2,1");
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_EQ(parse_composition("3,1,2"), Composition({3, 1, 2}));
  CHECK_EQ(format_composition(Composition({3, 1, 2})), "3,1,2");
}

TEST_CASE("fountain text") {
  CHECK_EQ(parse_fountain("b=2; missing=1,0"), Fountain(2, {1, 0}));
  CHECK_EQ(parse_fountain("2; 1,0"), Fountain(2, {1, 0}));
  CHECK_EQ(format_fountain(Fountain(2, {1, 0})), "b=2; missing=1,0");
  CHECK_EQ(parse_fountain(format_fountain(Fountain())), Fountain());
  CHECK_THROWS_AS(parse_fountain("2 1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fountain("2; 0,1"), std::invalid_argument);
}

TEST_CASE("polyomino text") {
  const ParallelogramPolyomino q({0, 1}, {3, 4});
  CHECK_EQ(parse_polyomino("l: 0,1; r: 3,4"), q);
  CHECK_EQ(format_polyomino(q), "l: 0,1; r: 3,4");
  CHECK_EQ(parse_polyomino(format_polyomino(ParallelogramPolyomino())), ParallelogramPolyomino());
  CHECK_THROWS_AS(parse_polyomino("l: 0,3; r: 3,4"), std::invalid_argument);
}

TEST_CASE("integer lists and objects") {
  CHECK_EQ(parse_int_list("1, 2 3"), std::vector<int>{1, 2, 3});
  CHECK(parse_int_list("  ").empty());
  CHECK_THROWS_AS(parse_int_list("1,-2"), std::invalid_argument);
  CHECK_EQ(format_int_list(std::vector<int>{1, 2, 3}, " "), "1 2 3");
  CHECK_EQ(format_object(FamilyObject(Partition({2, 1}))), "2,1");
  CHECK_EQ(format_object(FamilyObject(CoinSet({Coin{1, 1}}))), "b=1; missing=0");
}
