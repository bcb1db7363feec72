#include "invperm/bigcount.hpp"

#include <algorithm>

namespace invperm {

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace invperm
