#include "invperm/verify.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "invperm/bijections.hpp"
#include "invperm/counting.hpp"
#include "invperm/oracle.hpp"
#include "invperm/text.hpp"

namespace invperm {

namespace {

class Reporter {
 public:
  void check(const std::string& label, const std::vector<std::string>& failures) {
    ++result_.checks;
    if (failures.empty()) {
      out_ << "ok       " << label << '\n';
      return;
    }
    ++result_.mismatches;
    out_ << "MISMATCH " << label << '\n';
    for (const auto& f : failures) out_ << "         " << f << '\n';
  }

  void erratum(const std::string& label, const std::vector<std::string>& differences) {
    if (differences.empty()) {
      out_ << "note     " << label << ": printed form agrees\n";
      return;
    }
    ++result_.errata;
    out_ << "ERRATUM  " << label << '\n';
    for (const auto& d : differences) out_ << "         " << d << '\n';
  }

  void section(const std::string& title) { out_ << "== " << title << '\n'; }

  VerifyResult finish() {
    out_ << "summary: " << result_.checks << " checks, " << result_.mismatches
         << " mismatches, " << result_.errata << " errata\n";
    result_.report = out_.str();
    return result_;
  }

 private:
  std::ostringstream out_;
  VerifyResult result_;
};

std::string range_label(int kmax) { return "k=0.." + std::to_string(kmax); }

std::vector<BigCount> oracle_series(const PatternSet& s, int kmax) {
  std::vector<BigCount> out;
  EnumerationBudget budget;
  budget.kmax = std::max(budget.kmax, kmax);
  for (int k = 0; k <= kmax; ++k) out.push_back(oracle_count(k, s, budget));
  return out;
}

std::vector<std::string> series_diff(const std::vector<BigCount>& expected,
                                     const std::vector<BigCount>& actual,
                                     const std::string& expected_name,
                                     const std::string& actual_name) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (expected[k] != actual[k]) {
      out.push_back("k=" + std::to_string(k) + ": " + expected_name + " " +
                    to_string(expected[k]) + ", " + actual_name + " " + to_string(actual[k]));
    }
  }
  return out;
}

std::vector<BigCount> object_series(Family family, int kmax) {
  EnumerationBudget budget;
  budget.kmax = std::max(budget.kmax, kmax);
  std::vector<BigCount> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(enumerate_objects(family, k, budget).size());
  return out;
}

const std::vector<std::string>& fast_path_sets() {
  static const std::vector<std::string> sets = {
      "12",          "123",         "132",         "321",         "123,231",
      "123,132",     "132,213",     "132,231",     "132,321",     "231,312",
      "231,321",     "123,132,213", "123,132,231", "132,213,231", "132,213,321",
      "123,132,213,231"};
  return sets;
}

void run_counts(Reporter& rep, int kmax) {
  rep.section("fast paths against the oracle");
  for (const std::string& text : fast_path_sets()) {
    const PatternSet s = parse_pattern_set(text);
    const CountingMethod method = select_method(s);
    rep.check(text + " via " + method.name() + " " + range_label(kmax),
              series_diff(oracle_series(s, kmax), count_upto(s, kmax, method), "oracle",
                          method.name()));
  }

  rep.section("symmetry invariance");
  for (const std::string& text : std::vector<std::string>{"132", "231", "123,231", "132,213,321"}) {
    const PatternSet s = parse_pattern_set(text);
    const auto base = oracle_series(s, kmax);
    for (GroupElement g : {GroupElement::inverse, GroupElement::reverse_complement,
                           GroupElement::rc_inverse}) {
      const PatternSet image = apply_group_element(s, g);
      rep.check(text + " under " + group_element_name(g) + " (" + format_pattern_set(image) +
                    ") " + range_label(kmax),
                series_diff(base, oracle_series(image, kmax), "original", "image"));
    }
  }

  rep.section("object families against the oracle");
  const std::vector<std::pair<Family, std::string>> pairs = {
      {Family::partitions, "132"},          {Family::fountains, "231"},
      {Family::polyominoes, "321"},         {Family::even_fountains, "321"},
      {Family::gorenstein, "132,213"},      {Family::distinct_partitions, "132,231"},
      {Family::equal_partitions, "132,321"}, {Family::almost_triangular, "123,132"}};
  for (const auto& [family, text] : pairs) {
    rep.check(family_name(family) + " vs " + text + " " + range_label(kmax),
              series_diff(oracle_series(parse_pattern_set(text), kmax),
                          object_series(family, kmax), "oracle", family_name(family)));
  }

  rep.section("cross-checks between fast paths");
  rep.check("count_gorenstein vs gf:gorenstein_compositions " + range_label(kmax),
            series_diff(count_gorenstein_upto(kmax),
                        gf_coefficients("gorenstein_compositions", kmax), "recurrence", "gf"));
  rep.check("gf:almost_triangular vs closed_form:almost_triangular_count " + range_label(kmax),
            [&] {
              std::vector<BigCount> closed;
              for (int k = 0; k <= kmax; ++k) closed.push_back(closed_form("almost_triangular_count", k));
              return series_diff(closed, gf_coefficients("almost_triangular", kmax), "closed form",
                                 "gf");
            }());
  rep.check("gf:diagonal_pascal vs closed_form:diagonal_pascal_binomial " + range_label(kmax),
            [&] {
              std::vector<BigCount> closed;
              for (int k = 0; k <= kmax; ++k) closed.push_back(closed_form("diagonal_pascal_binomial", k));
              return series_diff(closed, gf_coefficients("diagonal_pascal", kmax), "closed form",
                                 "gf");
            }());
  {
    const auto a = table_321(kmax);
    std::vector<std::string> failures;
    for (int n = 0; n <= kmax; ++n) {
      for (int m = 2; m <= static_cast<int>(a[n].size()); ++m) {
        BigCount rhs = a[n][m - 2];
        for (int i = m; i <= n; ++i) rhs += a[n - i][i - 1];
        if (n > 0 && rhs != a[n][m - 1]) {
          failures.push_back("a(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
      }
    }
    rep.check("321 table satisfies a(n,m) = a(n,m-1) + sum a(n-i,i) " + range_label(kmax),
              failures);
  }

  rep.section("printed formulas");
  const auto almost = oracle_series(parse_pattern_set("123,132"), kmax);
  rep.erratum("almost-triangular series with exponent (n-2)(n+1)/2 vs oracle 123,132",
              series_diff(almost, gf_coefficients("almost_triangular_printed", kmax), "oracle",
                          "printed"));
  std::vector<BigCount> printed_binomial;
  for (int k = 0; k <= kmax; ++k) {
    printed_binomial.push_back(closed_form("diagonal_pascal_binomial_printed", k));
  }
  rep.erratum("diagonal-pascal binomial C(s+1, r-s+1) vs oracle 123,132,213",
              series_diff(oracle_series(parse_pattern_set("123,132,213"), kmax),
                          printed_binomial, "oracle", "printed"));
}

template <typename Object>
std::vector<std::string> bijection_failures(
    int k, const PatternSet& s, const std::vector<Object>& objects,
    const std::function<Object(const Permutation&)>& forward,
    const std::function<Permutation(const Object&)>& backward,
    const std::function<std::string(const Object&)>& show) {
  std::vector<std::string> failures;
  std::vector<Object> images;
  for_each_Ik(k, s, [&](const Permutation& p) {
    Object image = forward(p);
    if (backward(image) != p) {
      failures.push_back("round trip fails for " + format_permutation(p));
    }
    images.push_back(std::move(image));
  });
  for (const Object& o : objects) {
    const Permutation p = backward(o);
    if (!(forward(p) == o)) failures.push_back("object round trip fails for " + show(o));
  }
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (const auto& o : images) a.push_back(show(o));
  for (const auto& o : objects) b.push_back(show(o));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) failures.push_back("images not distinct");
  if (a != b) failures.push_back("image differs from the enumerated family");
  return failures;
}

std::vector<std::string> prefixed(int k, std::vector<std::string> failures) {
  for (auto& f : failures) f = "k=" + std::to_string(k) + ": " + f;
  return failures;
}

// Subdiagonal sequences of each length up to `max_len`.
void for_each_subdiagonal(int max_len, const std::function<void(const std::vector<int>&)>& visit) {
  for (int n = 1; n <= max_len; ++n) {
    std::vector<int> seq(n, 0);
    while (true) {
      visit(seq);
      int i = n - 1;
      while (i >= 0 && seq[i] == n - 1 - i) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
}

void run_bijections(Reporter& rep, int kmax) {
  rep.section("bijections against enumerated families");
  const PatternSet p132 = parse_pattern_set("132");
  const PatternSet p231 = parse_pattern_set("231");
  const PatternSet p321 = parse_pattern_set("321");
  std::vector<std::string> f132, f231, f321, feven, fgor;
  for (int k = 0; k <= kmax; ++k) {
    auto add = [&](std::vector<std::string>& into, std::vector<std::string> more) {
      for (auto& m : prefixed(k, std::move(more))) into.push_back(std::move(m));
    };
    add(f132, bijection_failures<Partition>(k, p132, enumerate_partitions(k), p132_to_partition,
                                            partition_to_p132, format_partition));
    add(f231, bijection_failures<Fountain>(k, p231, enumerate_fountains(k), p231_to_fountain,
                                           fountain_to_p231, format_fountain));
    add(f321, bijection_failures<ParallelogramPolyomino>(k, p321, enumerate_polyominoes(k),
                                                         p321_to_polyomino, polyomino_to_p321,
                                                         format_polyomino));
    add(feven, bijection_failures<CoinSet>(
                   k, p321, enumerate_even_fountains(k), p321_to_even_fountain,
                   even_fountain_to_p321,
                   [](const CoinSet& c) { return format_fountain(coinset_to_fountain(c)); }));
    std::vector<std::string> gor;
    for (const Partition& q : enumerate_partitions(k)) {
      if (!is_gorenstein(q) || q.empty()) continue;
      const Composition m = gorenstein_to_composition(q);
      if (!(gorenstein_from_composition(m) == q)) {
        gor.push_back("round trip fails for " + format_partition(q));
      }
    }
    add(fgor, std::move(gor));
  }
  rep.check("132-partition " + range_label(kmax), f132);
  rep.check("231-fountain " + range_label(kmax), f231);
  rep.check("321-polyomino " + range_label(kmax), f321);
  rep.check("even-fountain " + range_label(kmax), feven);

  std::vector<std::string> compositions;
  for (int s = 2; s <= std::min(kmax, 10); ++s) {
    std::set<std::vector<int>> seen;
    for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
      if (mask == 0) continue;  // one term
      std::vector<int> terms;
      int run = 1;
      for (int i = 0; i < s - 1; ++i) {
        if (mask >> i & 1) {
          terms.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      terms.push_back(run);
      const Composition m(terms);
      const Partition q = gorenstein_from_composition(m);
      const auto constant = diagonal_constant(q);
      if (!is_gorenstein(q) || (constant && *constant != s) || (!constant && !q.empty())) {
        compositions.push_back("s=" + std::to_string(s) + ": " + format_composition(m) +
                               " gives " + format_partition(q));
      }
      if (!seen.insert(std::vector<int>(q.parts().begin(), q.parts().end())).second) {
        compositions.push_back("s=" + std::to_string(s) + ": duplicate image " +
                               format_partition(q));
      }
      if (!q.empty() && !(gorenstein_to_composition(q) == m)) {
        compositions.push_back("s=" + std::to_string(s) + ": round trip fails for " +
                               format_composition(m));
      }
    }
  }
  rep.check("gorenstein-composition s=2.." + std::to_string(std::min(kmax, 10)), compositions);
  rep.check("gorenstein partitions round trip " + range_label(kmax), fgor);

  const int max_len = std::min(kmax, 7);
  std::vector<std::string> tables;
  for_each_subdiagonal(max_len, [&](const std::vector<int>& seq) {
    const Permutation p = permutation_from_table(SubdiagonalSequence(seq));
    const bool member = is_indecomposable(p) && !contains_pattern(p, Permutation{3, 2, 1});
    if (is_valid_321_table(seq) != member) tables.push_back(format_int_list(seq));
  });
  rep.check("321 table characterisation, lengths 1.." + std::to_string(max_len), tables);
}

}  // namespace

VerifyResult run_verification(int kmax, VerifySuite suite) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  Reporter rep;
  if (suite == VerifySuite::all || suite == VerifySuite::counts) run_counts(rep, kmax);
  if (suite == VerifySuite::all || suite == VerifySuite::bijections) run_bijections(rep, kmax);
  return rep.finish();
}

}  // namespace invperm
