#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace invperm {

/// Exact non-negative counts. All counting routines use this type so that
/// recurrence tables never overflow.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& value) { return value.str(); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigCount binomial(long n, long k);

}  // namespace invperm
