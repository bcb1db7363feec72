#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "invperm/bigcount.hpp"
#include "invperm/counting.hpp"
#include "invperm/permutation.hpp"

namespace invperm {

enum class Provenance { derived, fetched };

struct SequenceRecord {
  std::string id;
  int offset = 0;  // index of terms[0]
  std::vector<BigCount> terms;
  Provenance provenance = Provenance::derived;
  std::string source;  // how the terms were produced

  /// Term with OEIS index n, if the record covers it.
  std::optional<BigCount> at(long n) const;
};

/// Identifiers with a builtin derived prefix.
const std::vector<std::string>& builtin_ids();

/// At least 15 terms, produced on first use by this library's enumerators
/// (object families or the permutation oracle) and memoised. Throws
/// std::invalid_argument for unknown ids.
const SequenceRecord& builtin_reference(const std::string& id);

/// Parses b-file text: "n a(n)" per line, '#' comments and blank lines
/// skipped, indices contiguous. Errors carry the 1-based line number.
SequenceRecord parse_bfile(std::string_view text, std::string id = "");

struct ComparisonRow {
  int k;
  BigCount computed;
  std::optional<BigCount> reference;
  bool match;
};

struct ComparisonReport {
  std::string id;
  std::string patterns;
  std::string method;
  int shift = 0;  // k is compared with reference index k + shift
  std::vector<ComparisonRow> rows;
  std::optional<int> first_divergence;
  int compared = 0;
  bool all_match = false;
  int best_shift = 0;
  int best_shift_matches = 0;
  bool best_shift_all_match = false;
};

/// count(s, k) for k = 0..kmax against ref term k + shift. Also searches
/// shifts -3..3 for the best alignment (all compared terms equal, then most
/// terms compared, then smallest |shift|).
ComparisonReport compare(const PatternSet& s, const SequenceRecord& ref, int kmax,
                         int shift = 0);
std::string format_comparison(const ComparisonReport& report);

class CacheConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Persistent counts, one JSON document per canonical pattern set.
/// Values are write-once: recording a different value for a stored key
/// throws CacheConflict. Safe for concurrent use within a process.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);
  /// Uses $INVPERM_CACHE_DIR; nullptr when unset or empty.
  static std::unique_ptr<CountCache> from_environment();

  std::optional<BigCount> lookup(const PatternSet& s, int k) const;
  void record(const PatternSet& s, int k, const BigCount& value,
              const std::string& method);
  std::filesystem::path file_for(const PatternSet& s) const;

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
};

/// count(s, k) through the cache: a stored value is returned as is; a fresh
/// value is recorded.
BigCount cached_count(const PatternSet& s, int k, CountCache* cache,
                      const std::optional<CountingMethod>& method = std::nullopt);

class BFileFetcher {
 public:
  virtual ~BFileFetcher() = default;
  /// Raw b-file text for an identifier such as "A000041".
  virtual std::string fetch(const std::string& id) = 0;
};

/// HTTPS client for oeis.org. Throws std::runtime_error when the library
/// was built without TLS support.
std::unique_ptr<BFileFetcher> make_https_fetcher();

bool is_oeis_id(std::string_view id);

SequenceRecord fetch_reference(const std::string& id, BFileFetcher& fetcher);

}  // namespace invperm
