#include "invperm/sequences.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#ifdef INVPERM_HAVE_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "invperm/objects.hpp"
#include "invperm/oracle.hpp"
#include "invperm/text.hpp"

namespace invperm {

namespace {

constexpr int kBuiltinTerms = 15;

struct BuiltinSpec {
  int offset;
  std::string source;
  std::function<BigCount(int)> term;  // k -> value
};

BigCount count_partitions_where(int k, bool (*keep)(const Partition&)) {
  BigCount n = 0;
  for (const Partition& p : enumerate_partitions(k)) {
    if (keep(p)) n += 1;
  }
  return n;
}

BigCount oracle_term(const char* patterns, int k) {
  return oracle_count(k, parse_pattern_set(patterns));
}

const std::map<std::string, BuiltinSpec>& builtin_specs() {
  static const std::map<std::string, BuiltinSpec> specs = {
      {"A000041", {0, "enumerate partitions",
                   [](int k) { return BigCount(enumerate_partitions(k).size()); }}},
      {"A005169", {0, "enumerate fountains by row-wise coin placement",
                   [](int k) { return BigCount(enumerate_fountains(k).size()); }}},
      {"A006958", {0, "enumerate parallelogram polyominoes by cells",
                   [](int k) { return BigCount(enumerate_polyominoes(k).size()); }}},
      {"A135278", {1, "enumerate partitions, keep almost triangular",
                   [](int k) { return count_partitions_where(k, is_almost_triangular); }}},
      {"A117629", {0, "enumerate partitions, keep Gorenstein",
                   [](int k) { return count_partitions_where(k, is_gorenstein); }}},
      {"A000009", {0, "enumerate partitions, keep distinct parts",
                   [](int k) { return count_partitions_where(k, has_distinct_parts); }}},
      {"A000005", {1, "enumerate partitions, keep equal parts",
                   [](int k) { return count_partitions_where(k, has_equal_parts); }}},
      {"A010054", {0, "permutation oracle for 12",
                   [](int k) { return oracle_term("12", k); }}},
      {"A000012", {0, "permutation oracle for 231,321",
                   [](int k) { return oracle_term("231,321", k); }}},
      {"A001227", {1, "enumerate partitions, keep Gorenstein with distinct parts",
                   [](int k) {
                     return count_partitions_where(k, [](const Partition& p) {
                       return is_gorenstein(p) && has_distinct_parts(p);
                     });
                   }}},
      {"A103451", {0, "permutation oracle for 123,132,213,231",
                   [](int k) { return oracle_term("123,132,213,231", k); }}},
  };
  return specs;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_integer_token(std::string_view t) {
  if (!t.empty() && t.front() == '-') t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

std::optional<BigCount> SequenceRecord::at(long n) const {
  const long index = n - offset;
  if (index < 0 || index >= static_cast<long>(terms.size())) return std::nullopt;
  return terms[index];
}

const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, spec] : builtin_specs()) out.push_back(id);
    return out;
  }();
  return ids;
}

const SequenceRecord& builtin_reference(const std::string& id) {
  static std::mutex mutex;
  static std::map<std::string, SequenceRecord> memo;
  const auto& specs = builtin_specs();
  const auto spec = specs.find(id);
  if (spec == specs.end()) throw std::invalid_argument("no builtin reference for " + id);
  std::lock_guard lock(mutex);
  if (auto it = memo.find(id); it != memo.end()) return it->second;
  SequenceRecord record;
  record.id = id;
  record.offset = spec->second.offset;
  record.provenance = Provenance::derived;
  record.source = spec->second.source;
  for (int i = 0; i < kBuiltinTerms; ++i) {
    record.terms.push_back(spec->second.term(record.offset + i));
  }
  return memo.emplace(id, std::move(record)).first->second;
}

SequenceRecord parse_bfile(std::string_view text, std::string id) {
  SequenceRecord record;
  record.id = std::move(id);
  record.provenance = Provenance::fetched;
  record.source = "b-file";
  std::optional<long> previous;
  int line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto gap = line.find_first_of(" \t");
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (gap == std::string_view::npos) {
      throw std::invalid_argument(where + "expected 'n a(n)'");
    }
    const std::string_view index_text = line.substr(0, gap);
    const std::string_view value_text = trim(line.substr(gap));
    if (!is_integer_token(index_text) || !is_integer_token(value_text)) {
      throw std::invalid_argument(where + "expected two integers, got '" + std::string(line) + "'");
    }
    const long index = std::stol(std::string(index_text));
    if (previous && index != *previous + 1) {
      throw std::invalid_argument(where + "index " + std::to_string(index) +
                                  " does not follow " + std::to_string(*previous));
    }
    if (!previous) record.offset = static_cast<int>(index);
    previous = index;
    record.terms.emplace_back(std::string(value_text));
  }
  if (record.terms.empty()) throw std::invalid_argument("b-file has no terms");
  return record;
}

ComparisonReport compare(const PatternSet& s, const SequenceRecord& ref, int kmax,
                         int shift) {
  ComparisonReport report;
  report.id = ref.id;
  report.patterns = format_pattern_set(s);
  report.method = select_method(s).name();
  report.shift = shift;
  const std::vector<BigCount> counts = count_upto(s, kmax);

  struct Score {
    int compared = 0;
    int matched = 0;
    std::optional<int> first_divergence;
  };
  auto score = [&](int sh) {
    Score out;
    for (int k = 0; k <= kmax; ++k) {
      const auto reference = ref.at(k + sh);
      if (!reference) continue;
      ++out.compared;
      if (*reference == counts[k]) {
        ++out.matched;
      } else if (!out.first_divergence) {
        out.first_divergence = k;
      }
    }
    return out;
  };

  for (int k = 0; k <= kmax; ++k) {
    const auto reference = ref.at(k + shift);
    report.rows.push_back({k, counts[k], reference, reference && *reference == counts[k]});
  }
  const Score own = score(shift);
  report.compared = own.compared;
  report.first_divergence = own.first_divergence;
  report.all_match = own.compared > 0 && !own.first_divergence;

  std::optional<std::tuple<bool, int, int, int>> best;  // (all, compared, -|sh|, -sh)
  for (int sh = -3; sh <= 3; ++sh) {
    const Score sc = score(sh);
    const bool all = sc.compared > 0 && !sc.first_divergence;
    const auto key = std::make_tuple(all, all ? sc.compared : sc.matched, -std::abs(sh), -sh);
    if (!best || key > *best) {
      best = key;
      report.best_shift = sh;
      report.best_shift_matches = sc.matched;
      report.best_shift_all_match = all;
    }
  }
  return report;
}

std::string format_comparison(const ComparisonReport& r) {
  std::ostringstream out;
  out << "reference " << r.id << " vs patterns " << r.patterns << " (method " << r.method
      << ", shift " << r.shift << ")\n";
  for (const auto& row : r.rows) {
    out << "k=" << row.k << " count=" << row.computed << " reference=";
    if (row.reference) {
      out << *row.reference << (row.match ? " ok" : " MISMATCH");
    } else {
      out << "- absent";
    }
    if (r.first_divergence && *r.first_divergence == row.k) out << " <- first divergence";
    out << '\n';
  }
  if (r.all_match) {
    out << "result: all " << r.compared << " compared terms match\n";
  } else if (r.compared == 0) {
    out << "result: no overlapping terms\n";
  } else {
    out << "result: diverges at k=" << *r.first_divergence << '\n';
  }
  out << "best alignment: shift " << r.best_shift << " ("
      << (r.best_shift_all_match ? "all compared terms match" : "partial")
      << ", " << r.best_shift_matches << " matching terms)\n";
  return out.str();
}

CountCache::CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::unique_ptr<CountCache> CountCache::from_environment() {
  const char* dir = std::getenv("INVPERM_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return nullptr;
  return std::make_unique<CountCache>(dir);
}

std::filesystem::path CountCache::file_for(const PatternSet& s) const {
  std::string name = format_pattern_set(canonicalize_patterns(s).first);
  for (char& c : name) {
    if (c == ',') c = '_';
  }
  return dir_ / ("patterns_" + name + ".json");
}

namespace {

nlohmann::json load_document(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return nlohmann::json{{"entries", nlohmann::json::array()}};
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheConflict("corrupt cache file " + file.string() + ": " + e.what());
  }
}

const nlohmann::json* find_entry(const nlohmann::json& doc, int k) {
  for (const auto& entry : doc.at("entries")) {
    if (entry.at("k").get<int>() == k) return &entry;
  }
  return nullptr;
}

}  // namespace

std::optional<BigCount> CountCache::lookup(const PatternSet& s, int k) const {
  std::shared_lock lock(mutex_);
  const auto doc = load_document(file_for(s));
  if (const auto* entry = find_entry(doc, k)) {
    return BigCount(entry->at("count").get<std::string>());
  }
  return std::nullopt;
}

void CountCache::record(const PatternSet& s, int k, const BigCount& value,
                        const std::string& method) {
  std::unique_lock lock(mutex_);
  const auto file = file_for(s);
  auto doc = load_document(file);
  if (const auto* entry = find_entry(doc, k)) {
    const BigCount stored(entry->at("count").get<std::string>());
    if (stored != value) {
      throw CacheConflict("cached count for k=" + std::to_string(k) + " is " + to_string(stored) +
                          " but recomputation gave " + to_string(value));
    }
    return;
  }
  doc["patterns"] = format_pattern_set(canonicalize_patterns(s).first);
  doc["entries"].push_back({{"k", k},
                            {"count", to_string(value)},
                            {"method", method},
                            {"timestamp", utc_timestamp()}});
  auto& entries = doc["entries"];
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.at("k").template get<int>() < b.at("k").template get<int>();
  });
  const auto temp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(temp, std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + temp.string());
  }
  std::filesystem::rename(temp, file);
}

BigCount cached_count(const PatternSet& s, int k, CountCache* cache,
                      const std::optional<CountingMethod>& method) {
  if (cache) {
    if (auto hit = cache->lookup(s, k)) return *hit;
  }
  const CountingMethod m = method ? *method : select_method(s);
  BigCount value = count(s, k, m);
  if (cache) cache->record(s, k, value, m.name());
  return value;
}

bool is_oeis_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

namespace {

class HttpsFetcher : public BFileFetcher {
 public:
  std::string fetch(const std::string& id) override {
#ifdef INVPERM_HAVE_HTTPS
    httplib::SSLClient client("oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto response = client.Get(path);
    if (!response) {
      throw std::runtime_error("fetching " + id + " failed: " +
                               httplib::to_string(response.error()));
    }
    if (response->status != 200) {
      throw std::runtime_error("fetching " + id + " returned HTTP " +
                               std::to_string(response->status));
    }
    return response->body;
#else
    throw std::runtime_error("built without HTTPS support; cannot fetch " + id);
#endif
  }
};

}  // namespace

std::unique_ptr<BFileFetcher> make_https_fetcher() {
  return std::make_unique<HttpsFetcher>();
}

SequenceRecord fetch_reference(const std::string& id, BFileFetcher& fetcher) {
  if (!is_oeis_id(id)) throw std::invalid_argument("not an OEIS identifier: " + id);
  SequenceRecord record = parse_bfile(fetcher.fetch(id), id);
  record.provenance = Provenance::fetched;
  record.source = "b-file fetched from oeis.org";
  return record;
}

}  // namespace invperm
