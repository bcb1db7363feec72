#pragma once

#include <string>
#include <string_view>

#include "invperm/objects.hpp"
#include "invperm/oracle.hpp"
#include "invperm/permutation.hpp"

namespace invperm {

// Parsers throw std::invalid_argument with a message naming the offending
// token. Formatters produce the exact text the parsers accept.

/// "3 1 2", "3,1,2" or the compact word "312" (only for n <= 9).
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// Comma-separated digit words, e.g. "123,231".
PatternSet parse_pattern_set(std::string_view text);
std::string format_pattern_set(const PatternSet& s);

/// "4,2,1"; the empty partition is "()" and also parses from "".
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// "3,1,2".
Composition parse_composition(std::string_view text);
std::string format_composition(const Composition& c);

/// "b=2; missing=1,0"; also accepts "2; 1,0".
Fountain parse_fountain(std::string_view text);
std::string format_fountain(const Fountain& f);

/// "l: 0,1; r: 3,4"; the empty polyomino is "l: ; r: ".
ParallelogramPolyomino parse_polyomino(std::string_view text);
std::string format_polyomino(const ParallelogramPolyomino& q);

/// Whitespace or comma separated non-negative integers.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values, std::string_view sep = ",");

std::string format_object(const FamilyObject& object);

}  // namespace invperm
