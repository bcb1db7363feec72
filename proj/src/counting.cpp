#include "invperm/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <gmp.h>

#include "invperm/oracle.hpp"

namespace invperm {

namespace {

BigCount choose2(long n) { return n < 2 ? BigCount(0) : BigCount(n * (n - 1) / 2); }

long tri(long n) { return n * (n + 1) / 2; }

void require_non_negative(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
}

void add_at(std::vector<BigCount>& series, long exponent, const BigCount& value) {
  if (exponent >= 0 && exponent < static_cast<long>(series.size())) {
    series[exponent] += value;
  }
}

PatternSet patterns_from_words(std::initializer_list<const char*> words) {
  std::vector<Permutation> out;
  for (const char* w : words) {
    std::vector<int> values;
    for (const char* c = w; *c; ++c) values.push_back(*c - '0');
    out.emplace_back(std::move(values));
  }
  return PatternSet(std::move(out));
}

}  // namespace

std::string group_element_name(GroupElement g) {
  switch (g) {
    case GroupElement::identity: return "identity";
    case GroupElement::inverse: return "inverse";
    case GroupElement::reverse_complement: return "reverse_complement";
    case GroupElement::rc_inverse: return "reverse_complement_inverse";
  }
  return "?";
}

Permutation apply_group_element(const Permutation& p, GroupElement g) {
  switch (g) {
    case GroupElement::identity: return p;
    case GroupElement::inverse: return inverse(p);
    case GroupElement::reverse_complement: return reverse_complement(p);
    case GroupElement::rc_inverse: return reverse_complement(inverse(p));
  }
  return p;
}

PatternSet apply_group_element(const PatternSet& s, GroupElement g) {
  std::vector<Permutation> image;
  for (const Permutation& t : s.patterns()) image.push_back(apply_group_element(t, g));
  return PatternSet(std::move(image));
}

std::pair<PatternSet, GroupElement> canonicalize_patterns(const PatternSet& s) {
  std::pair<PatternSet, GroupElement> best{s, GroupElement::identity};
  for (GroupElement g : {GroupElement::inverse, GroupElement::reverse_complement,
                         GroupElement::rc_inverse}) {
    PatternSet image = apply_group_element(s, g);
    if (image < best.first) best = {std::move(image), g};
  }
  return best;
}

namespace {

// Row n stores a_{n,m} for m = 1..max(n, 1); for m > n the value equals
// a_{n,n} (a_{0,m} = 1), since the sum over i = m..n is empty.
template <typename Int>
std::vector<std::vector<Int>> triangle_321(int kmax) {
  std::vector<std::vector<Int>> a(kmax + 1);
  a[0].assign(1, Int(1));
  auto at = [&](int n, int m) -> const Int& {
    const auto& row = a[n];
    return row[std::min<std::size_t>(m, row.size()) - 1];
  };
  std::vector<Int> tail(kmax + 2);
  for (int n = 1; n <= kmax; ++n) {
    // tail[m] = sum_{i=m}^{n} a_{n-i,i}
    tail[n + 1] = 0;
    for (int m = n; m >= 1; --m) {
      tail[m] = tail[m + 1];
      tail[m] += at(n - m, m);
    }
    auto& row = a[n];
    row.resize(n);
    row[0] = tail[1];
    for (int m = 2; m <= n; ++m) {
      row[m - 1] = row[m - 2];
      row[m - 1] += tail[m];
    }
  }
  return a;
}

// Same recurrence on `limbs`-limb unsigned integers added at full width with
// mpn_add_n. Empty when a carry leaves the top limb.
std::optional<std::vector<BigCount>> first_column_321_fixed(int kmax, mp_size_t limbs) {
  std::vector<std::size_t> start(kmax + 2, 0);
  for (int n = 0; n <= kmax; ++n) start[n + 1] = start[n] + std::max(n, 1);
  std::vector<mp_limb_t> cells(start[kmax + 1] * limbs, 0);
  std::vector<mp_limb_t> tail((kmax + 2) * limbs, 0);
  auto cell = [&](int n, int m) {
    const int len = std::max(n, 1);
    return cells.data() + (start[n] + std::min(m, len) - 1) * limbs;
  };
  auto tail_at = [&](int m) { return tail.data() + m * limbs; };
  cells[0] = 1;
  for (int n = 1; n <= kmax; ++n) {
    std::fill(tail_at(n + 1), tail_at(n + 1) + limbs, 0);
    for (int m = n; m >= 1; --m) {
      if (mpn_add_n(tail_at(m), tail_at(m + 1), cell(n - m, m), limbs) != 0) return std::nullopt;
    }
    std::copy(tail_at(1), tail_at(1) + limbs, cell(n, 1));
    for (int m = 2; m <= n; ++m) {
      if (mpn_add_n(cell(n, m), cell(n, m - 1), tail_at(m), limbs) != 0) return std::nullopt;
    }
  }
  std::vector<BigCount> out;
  out.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    const mp_limb_t* value = cell(k, 1);
    BigCount v = 0;
    for (mp_size_t i = limbs; i-- > 0;) {
      v <<= GMP_NUMB_BITS;
      v += value[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<BigCount>> table_321(int kmax) {
  require_non_negative(kmax);
  const auto tri = triangle_321<BigCount>(kmax);
  const int width = std::max(kmax, 1);
  std::vector<std::vector<BigCount>> a(kmax + 1, std::vector<BigCount>(width));
  for (int n = 0; n <= kmax; ++n) {
    for (int m = 1; m <= width; ++m) {
      a[n][m - 1] = tri[n][std::min<std::size_t>(m, tri[n].size()) - 1];
    }
  }
  return a;
}

std::vector<BigCount> count_321_upto(int kmax) {
  require_non_negative(kmax);
  // Up to k = 800 every value fits in 1024 bits (a_k < 2.4^k), so all
  // additions run at that one width and cost the same for every k; a carry
  // out of the top limb falls through to arbitrary precision.
  constexpr mp_size_t kLimbs = 1024 / GMP_NUMB_BITS;
  if (kmax <= 800) {
    if (auto out = first_column_321_fixed(kmax, kLimbs)) return *out;
  }
  const auto a = triangle_321<BigCount>(kmax);
  std::vector<BigCount> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(a[k][0]);
  return out;
}

BigCount count_321(int k) { return count_321_upto(k).back(); }

std::vector<BigCount> count_123_upto(int kmax) {
  require_non_negative(kmax);
  const int K = kmax;
  // layer[m][k] = c_{n,m,k} for the current n; m is clamped to n since
  // non-diagonal entries of an n-element sequence are at most n - 2.
  std::vector<std::vector<BigCount>> prev(1, std::vector<BigCount>(K + 1));
  prev[0][0] = 1;  // n = 0
  std::vector<BigCount> total(K + 1);
  for (int n = 1; n <= K + 2; ++n) {
    // reach[M][k] = sum_{i=0}^{M} c_{n-1,i,k-i}, M = 0..n-2
    const int top = n - 2;
    std::vector<std::vector<BigCount>> reach(std::max(top + 1, 0),
                                             std::vector<BigCount>(K + 1));
    for (int M = 0; M <= top; ++M) {
      const auto& row = prev[std::min<int>(M, static_cast<int>(prev.size()) - 1)];
      for (int k = 0; k <= K; ++k) {
        reach[M][k] = M > 0 ? reach[M - 1][k] : BigCount(0);
        if (k - M >= 0) reach[M][k] += row[k - M];
      }
    }
    std::vector<std::vector<BigCount>> cur(n + 1, std::vector<BigCount>(K + 1));
    for (int m = 0; m <= n; ++m) {
      const auto& diag = prev[std::min<int>(m, static_cast<int>(prev.size()) - 1)];
      const int M = std::min(n - 2, m - 1);
      for (int k = 0; k <= K; ++k) {
        BigCount value = 0;
        if (k - n + 1 >= 0) value += diag[k - n + 1];
        if (M >= 0) value += reach[M][k];
        cur[m][k] = std::move(value);
      }
    }
    for (int k = 0; k <= K; ++k) total[k] += cur[n][k];
    prev = std::move(cur);
  }
  // decomposable members: two non-empty decreasing components
  std::vector<BigCount> decomposable(K + 1);
  for (long i = 0; tri(i) <= K; ++i) {
    for (long j = 0; tri(i) + tri(j) <= K; ++j) decomposable[tri(i) + tri(j)] += 1;
  }
  for (int k = 0; k <= K; ++k) total[k] -= decomposable[k];
  return total;
}

BigCount count_123(int k) { return count_123_upto(k).back(); }

std::vector<BigCount> count_gorenstein_upto(int nmax) {
  require_non_negative(nmax);
  // f[n][d]
  std::vector<std::vector<BigCount>> f(nmax + 1, std::vector<BigCount>(nmax + 1));
  for (int d = 0; d <= nmax; ++d) f[0][d] = 1;
  for (int n = 1; n <= nmax; ++n) {
    for (int d = 1; d <= nmax; ++d) {
      // k(d + 1 - k) is concave in k, so only runs at both ends are <= n.
      BigCount value = 0;
      int lo = 1;
      for (; lo <= d && static_cast<long>(lo) * (d + 1 - lo) <= n; ++lo) {
        value += f[n - lo * (d + 1 - lo)][d - lo];
      }
      for (int hi = d; hi >= lo && static_cast<long>(hi) * (d + 1 - hi) <= n; --hi) {
        value += f[n - hi * (d + 1 - hi)][d - hi];
      }
      f[n][d] = std::move(value);
    }
  }
  std::vector<BigCount> out(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    for (int d = 0; d <= n; ++d) out[n] += f[n][d];
  }
  return out;
}

BigCount count_gorenstein(int n) { return count_gorenstein_upto(n).back(); }

const std::vector<std::string>& gf_names() {
  static const std::vector<std::string> names = {
      "fountain_rectangle", "almost_triangular", "almost_triangular_printed",
      "diagonal_pascal",    "pascal_zeroed",     "gorenstein_compositions"};
  return names;
}

std::vector<BigCount> gf_coefficients(const std::string& name, int kmax) {
  require_non_negative(kmax);
  std::vector<BigCount> c(kmax + 1);
  if (name == "fountain_rectangle") {
    for (long i = 1; choose2(i) <= kmax; ++i) add_at(c, i * (i - 1) / 2, 1);
    for (long i = 1; tri(i) <= kmax; ++i) {
      for (long j = 1; tri(j) <= kmax; ++j) {
        for (long l = 0; l < std::min(i, j); ++l) {
          add_at(c, tri(i) + tri(j) - tri(l), 1);
        }
      }
    }
  } else if (name == "almost_triangular" || name == "almost_triangular_printed") {
    const bool printed = name == "almost_triangular_printed";
    if (!printed) c[0] += 1;
    for (long n = 1;; ++n) {
      const long shift = printed ? (n - 2) * (n + 1) / 2 : n * (n - 1) / 2;
      if (shift + 1 > kmax) break;
      for (long j = 1; j <= n; ++j) add_at(c, shift + j, binomial(n, j));
    }
  } else if (name == "diagonal_pascal") {
    c[0] += 1;
    add_at(c, 1, 1);
    for (long d = 3; 1 + (d - 1) * (d - 2) / 2 <= kmax; ++d) {
      const long shift = 1 + (d - 1) * (d - 2) / 2;
      for (long n = 2; n <= d; ++n) add_at(c, shift + n - 2, binomial(n, d - n));
    }
  } else if (name == "pascal_zeroed") {
    for (long i = 0; tri(i) <= kmax; ++i) {
      add_at(c, tri(i), 1);
      add_at(c, (i + 1) * (i + 4) / 2, 1);
    }
  } else if (name == "gorenstein_compositions") {
    // C(s,2) - sum C(m,2) = sum over terms of m times the partial sum before
    // it, which only grows; state (partial sum, exponent, at least two terms).
    const int smax = kmax + 1;
    using Layer = std::vector<std::vector<BigCount>>;  // [exponent][terms>=2]
    std::vector<Layer> state(smax + 1, Layer(kmax + 1, std::vector<BigCount>(3)));
    state[0][0][0] = 1;
    for (int t = 0; t <= smax; ++t) {
      for (int e = 0; e <= kmax; ++e) {
        for (int terms = 0; terms <= 2; ++terms) {
          const BigCount& ways = state[t][e][terms];
          if (ways == 0) continue;
          for (int m = 1; t + m <= smax; ++m) {
            const long next_e = e + static_cast<long>(t) * m;
            if (next_e > kmax) break;
            state[t + m][next_e][std::min(terms + 1, 2)] += ways;
          }
        }
      }
    }
    for (int s = 0; s <= smax; ++s) {
      for (int e = 0; e <= kmax; ++e) {
        c[e] += state[s][e][0] + state[s][e][2];
      }
    }
  } else {
    throw std::invalid_argument("unknown generating function: " + name);
  }
  return c;
}

const std::vector<std::string>& closed_form_names() {
  static const std::vector<std::string> names = {
      "all_ones",          "triangular_char",
      "partition_count",   "distinct_partition_count",
      "divisor_count",     "odd_divisor_count",
      "almost_triangular_count", "diagonal_pascal_binomial",
      "diagonal_pascal_binomial_printed"};
  return names;
}

namespace {

BigCount partition_number(int k) {
  std::vector<BigCount> p(k + 1);
  p[0] = 1;
  for (int n = 1; n <= k; ++n) {
    BigCount value = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const int g2 = j * (3 * j + 1) / 2;
      const bool plus = j % 2 == 1;
      if (plus) value += p[n - g1]; else value -= p[n - g1];
      if (g2 <= n) {
        if (plus) value += p[n - g2]; else value -= p[n - g2];
      }
    }
    p[n] = std::move(value);
  }
  return p[k];
}

BigCount distinct_partition_number(int k) {
  std::vector<BigCount> q(k + 1);
  q[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int n = k; n >= part; --n) q[n] += q[n - part];
  }
  return q[k];
}

// r with r(r-1)/2 < k <= r(r+1)/2, for k >= 1
long triangular_row(long k) {
  long r = 1;
  while (tri(r) < k) ++r;
  return r;
}

}  // namespace

BigCount closed_form(const std::string& name, int k) {
  require_non_negative(k);
  if (name == "all_ones") return 1;
  if (name == "triangular_char") {
    for (long i = 0; tri(i) <= k; ++i) {
      if (tri(i) == k) return 1;
    }
    return 0;
  }
  if (name == "partition_count") return partition_number(k);
  if (name == "distinct_partition_count") return distinct_partition_number(k);
  if (name == "divisor_count" || name == "odd_divisor_count") {
    if (k == 0) return 1;
    const bool odd_only = name == "odd_divisor_count";
    long divisors = 0;
    for (long d = 1; d <= k; ++d) {
      if (k % d == 0 && (!odd_only || d % 2 == 1)) ++divisors;
    }
    return divisors;
  }
  if (name == "almost_triangular_count") {
    if (k == 0) return 1;
    const long r = triangular_row(k);
    return binomial(r, k - r * (r - 1) / 2);
  }
  if (name == "diagonal_pascal_binomial" || name == "diagonal_pascal_binomial_printed") {
    if (k == 0) return 1;
    const long r = triangular_row(k);
    const long s = k - r * (r - 1) / 2;
    return name == "diagonal_pascal_binomial" ? binomial(s + 1, r - s)
                                              : binomial(s + 1, r - s + 1);
  }
  throw std::invalid_argument("unknown closed form: " + name);
}

std::string CountingMethod::name() const {
  switch (tag) {
    case Tag::oracle: return "oracle";
    case Tag::recurrence_321: return "recurrence_321";
    case Tag::recurrence_123: return "recurrence_123";
    case Tag::recurrence_gorenstein: return "recurrence_gorenstein";
    case Tag::gf_named: return "gf:" + parameter;
    case Tag::closed_form_named: return "closed_form:" + parameter;
  }
  return "?";
}

namespace {

const std::map<PatternSet, CountingMethod>& method_table() {
  using Tag = CountingMethod::Tag;
  static const std::map<PatternSet, CountingMethod> table = [] {
    const std::vector<std::pair<PatternSet, CountingMethod>> rows = {
        {patterns_from_words({"12"}), {Tag::closed_form_named, "triangular_char"}},
        {patterns_from_words({"123"}), {Tag::recurrence_123, ""}},
        {patterns_from_words({"132"}), {Tag::closed_form_named, "partition_count"}},
        {patterns_from_words({"321"}), {Tag::recurrence_321, ""}},
        {patterns_from_words({"123", "231"}), {Tag::gf_named, "fountain_rectangle"}},
        {patterns_from_words({"123", "132"}),
         {Tag::closed_form_named, "almost_triangular_count"}},
        {patterns_from_words({"132", "213"}), {Tag::recurrence_gorenstein, ""}},
        {patterns_from_words({"132", "231"}),
         {Tag::closed_form_named, "distinct_partition_count"}},
        {patterns_from_words({"132", "321"}), {Tag::closed_form_named, "divisor_count"}},
        {patterns_from_words({"231", "312"}), {Tag::closed_form_named, "triangular_char"}},
        {patterns_from_words({"231", "321"}), {Tag::closed_form_named, "all_ones"}},
        {patterns_from_words({"123", "132", "213"}),
         {Tag::closed_form_named, "diagonal_pascal_binomial"}},
        {patterns_from_words({"123", "132", "231"}), {Tag::closed_form_named, "all_ones"}},
        {patterns_from_words({"132", "213", "231"}),
         {Tag::closed_form_named, "odd_divisor_count"}},
        {patterns_from_words({"132", "213", "321"}),
         {Tag::closed_form_named, "divisor_count"}},
        {patterns_from_words({"123", "132", "213", "231"}),
         {Tag::gf_named, "pascal_zeroed"}},
    };
    std::map<PatternSet, CountingMethod> out;
    for (const auto& [set, method] : rows) {
      out.emplace(canonicalize_patterns(set).first, method);
    }
    return out;
  }();
  return table;
}

}  // namespace

CountingMethod select_method(const PatternSet& s) {
  const auto& table = method_table();
  const auto it = table.find(canonicalize_patterns(s).first);
  return it == table.end() ? CountingMethod{} : it->second;
}

std::vector<BigCount> count_upto(const PatternSet& s, int kmax,
                                 const std::optional<CountingMethod>& method) {
  require_non_negative(kmax);
  const CountingMethod m = method ? *method : select_method(s);
  using Tag = CountingMethod::Tag;
  switch (m.tag) {
    case Tag::recurrence_321: return count_321_upto(kmax);
    case Tag::recurrence_123: return count_123_upto(kmax);
    case Tag::recurrence_gorenstein: return count_gorenstein_upto(kmax);
    case Tag::gf_named: return gf_coefficients(m.parameter, kmax);
    case Tag::closed_form_named: {
      std::vector<BigCount> out;
      for (int k = 0; k <= kmax; ++k) out.push_back(closed_form(m.parameter, k));
      return out;
    }
    case Tag::oracle: {
      const PatternSet canonical = canonicalize_patterns(s).first;
      std::vector<BigCount> out;
      for (int k = 0; k <= kmax; ++k) out.push_back(oracle_count(k, canonical));
      return out;
    }
  }
  throw std::logic_error("unhandled counting method");
}

BigCount count(const PatternSet& s, int k, const std::optional<CountingMethod>& method) {
  require_non_negative(k);
  const CountingMethod m = method ? *method : select_method(s);
  if (m.tag == CountingMethod::Tag::oracle) {
    return oracle_count(k, canonicalize_patterns(s).first);
  }
  if (m.tag == CountingMethod::Tag::closed_form_named) return closed_form(m.parameter, k);
  return count_upto(s, k, m).back();
}

std::vector<ConjectureRow> conjecture_check(const std::string& name, int kmax,
                                            int kmax_limit) {
  require_non_negative(kmax);
  if (kmax > kmax_limit) {
    throw std::invalid_argument("kmax " + std::to_string(kmax) + " exceeds the limit " +
                                std::to_string(kmax_limit));
  }
  PatternSet patterns = patterns_from_words({"1"});
  if (name == "c132_4321") {
    patterns = patterns_from_words({"132", "4321"});
  } else if (name == "c321_1342") {
    patterns = patterns_from_words({"321", "1342"});
  } else {
    throw std::invalid_argument("unknown conjecture: " + name);
  }
  EnumerationBudget budget;
  budget.kmax = std::max(budget.kmax, kmax);
  std::vector<ConjectureRow> rows;
  for (int k = 0; k <= kmax; ++k) {
    ConjectureRow row{k, oracle_count(k, patterns, budget), 0, false, std::nullopt};
    if (name == "c132_4321") {
      for (const Partition& p : enumerate_partitions(k)) {
        const bool two_sizes = std::all_of(p.parts().begin(), p.parts().end(), [&](int v) {
          return v == p[0] || v == p[p.size() - 1];
        });
        if (two_sizes) row.formula += 1;
      }
    } else {
      row.formula = static_cast<long>(k) * (k - 1) / 2 + 1;
      row.printed = BigCount(static_cast<long>(k) * (k + 1) / 2 + 1);
    }
    row.match = row.oracle == row.formula;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace invperm
