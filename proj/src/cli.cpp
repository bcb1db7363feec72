#include "invperm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invperm/bijections.hpp"
#include "invperm/counting.hpp"
#include "invperm/oracle.hpp"
#include "invperm/render.hpp"
#include "invperm/sequences.hpp"
#include "invperm/text.hpp"
#include "invperm/verify.hpp"

namespace invperm {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string patterns;
  std::optional<int> k;
  std::optional<int> kmax;
  std::string method = "auto";
  std::string format = "table";
  std::optional<std::size_t> limit;
  std::string family;
  std::string bijection;
  std::string dir = "fwd";
  std::string input;
  std::string suite = "all";
  std::string conjecture;
  std::string id;
  bool fetch = false;
  std::string bfile;
  int shift = 0;
  std::string object;
  bool svg = false;
  bool ascii = false;
  bool even = false;
};

CountingMethod parse_method(const std::string& text, const PatternSet& s) {
  using Tag = CountingMethod::Tag;
  if (text == "auto") return select_method(s);
  if (text == "oracle") return {Tag::oracle, ""};
  if (text == "recurrence_321") return {Tag::recurrence_321, ""};
  if (text == "recurrence_123") return {Tag::recurrence_123, ""};
  if (text == "recurrence_gorenstein") return {Tag::recurrence_gorenstein, ""};
  auto named = [&](const std::string& prefix, const std::vector<std::string>& names,
                   Tag tag) -> std::optional<CountingMethod> {
    if (text.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string name = text.substr(prefix.size());
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError("unknown " + prefix + " name '" + name + "'");
    }
    return CountingMethod{tag, name};
  };
  if (auto m = named("gf:", gf_names(), Tag::gf_named)) return *m;
  if (auto m = named("closed_form:", closed_form_names(), Tag::closed_form_named)) return *m;
  throw UsageError("unknown method '" + text + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_count(const Options& o, std::ostream& out) {
  const PatternSet s = parse_pattern_set(o.patterns);
  const CountingMethod method = parse_method(o.method, s);
  int lo = 0;
  int hi = 0;
  if (o.k && o.kmax) throw UsageError("give either --k or --kmax, not both");
  if (o.k) {
    lo = hi = *o.k;
  } else if (o.kmax) {
    hi = *o.kmax;
  } else {
    throw UsageError("count needs --k or --kmax");
  }
  if (lo < 0 || hi < 0) throw UsageError("k must be non-negative");

  auto cache = CountCache::from_environment();
  std::vector<BigCount> values;
  if (cache) {
    for (int k = lo; k <= hi; ++k) values.push_back(cached_count(s, k, cache.get(), method));
  } else if (lo == hi) {
    values.push_back(count(s, lo, method));
  } else {
    values = count_upto(s, hi, method);
  }

  const std::string patterns = format_pattern_set(s);
  const std::string method_name = method.name();
  if (o.format == "csv") {
    out << "patterns,k,count,method\n";
    for (int k = lo; k <= hi; ++k) {
      out << csv_field(patterns) << ',' << k << ',' << values[k - lo] << ',' << method_name << '\n';
    }
  } else if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = lo; k <= hi; ++k) {
      rows.push_back({{"patterns", patterns},
                      {"k", k},
                      {"count", to_string(values[k - lo])},
                      {"method", method_name}});
    }
    out << rows.dump(2) << '\n';
  } else {
    std::size_t width = 5;
    for (const auto& v : values) width = std::max(width, to_string(v).size());
    const std::size_t pw = std::max<std::size_t>(8, patterns.size());
    out << std::left << std::setw(pw) << "patterns" << "  " << std::right << std::setw(4) << "k"
        << "  " << std::setw(width) << "count" << "  method\n";
    for (int k = lo; k <= hi; ++k) {
      out << std::left << std::setw(pw) << patterns << "  " << std::right << std::setw(4) << k
          << "  " << std::setw(width) << to_string(values[k - lo]) << "  " << method_name << '\n';
    }
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.k) throw UsageError("enumerate needs --k");
  if (o.patterns.empty() == o.family.empty()) {
    throw UsageError("enumerate needs exactly one of --patterns or --family");
  }
  EnumerationBudget budget;
  budget.kmax = std::max(budget.kmax, *o.k);
  if (o.limit) budget.max_items = *o.limit;
  if (!o.family.empty()) {
    const auto family = parse_family(o.family);
    if (!family) throw UsageError("unknown family '" + o.family + "'");
    for (const auto& object : enumerate_objects(*family, *o.k, budget)) {
      out << format_object(object) << '\n';
    }
    return 0;
  }
  const PatternSet s = parse_pattern_set(o.patterns);
  for (const Permutation& p : enumerate_Ik(*o.k, s, budget)) out << format_permutation(p) << '\n';
  return 0;
}

int cmd_map(const Options& o, std::ostream& out) {
  const bool fwd = o.dir == "fwd";
  if (!fwd && o.dir != "inv") throw UsageError("--dir must be fwd or inv");
  const std::string& b = o.bijection;
  if (b == "132-partition") {
    out << (fwd ? format_partition(p132_to_partition(parse_permutation(o.input)))
                : format_permutation(partition_to_p132(parse_partition(o.input))));
  } else if (b == "231-fountain") {
    out << (fwd ? format_fountain(p231_to_fountain(parse_permutation(o.input)))
                : format_permutation(fountain_to_p231(parse_fountain(o.input))));
  } else if (b == "321-polyomino") {
    out << (fwd ? format_polyomino(p321_to_polyomino(parse_permutation(o.input)))
                : format_permutation(polyomino_to_p321(parse_polyomino(o.input))));
  } else if (b == "even-fountain") {
    if (fwd) {
      out << format_fountain(coinset_to_fountain(p321_to_even_fountain(parse_permutation(o.input))));
    } else {
      out << format_permutation(
          even_fountain_to_p321(fountain_to_coinset(parse_fountain(o.input))));
    }
  } else if (b == "gorenstein-composition") {
    out << (fwd ? format_partition(gorenstein_from_composition(parse_composition(o.input)))
                : format_composition(gorenstein_to_composition(parse_partition(o.input))));
  } else {
    throw UsageError("unknown bijection '" + b + "'");
  }
  out << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int kmax = o.kmax.value_or(9);
  VerifySuite suite = VerifySuite::all;
  if (o.suite == "bijections") {
    suite = VerifySuite::bijections;
  } else if (o.suite == "counts") {
    suite = VerifySuite::counts;
  } else if (o.suite != "all") {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  const VerifyResult result = run_verification(kmax, suite);
  out << "verify kmax=" << kmax << " suite=" << o.suite << '\n' << result.report;
  return result.mismatches == 0 ? 0 : 1;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  std::string name;
  if (o.conjecture == "132-4321") {
    name = "c132_4321";
  } else if (o.conjecture == "321-1342") {
    name = "c321_1342";
  } else {
    throw UsageError("unknown conjecture '" + o.conjecture + "'");
  }
  const int kmax = o.kmax.value_or(12);
  const auto rows = conjecture_check(name, kmax);
  const bool printed = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.printed.has_value();
  });
  out << "conjecture " << o.conjecture << " k=0.." << kmax << '\n';
  out << "k  oracle  formula" << (printed ? "  printed" : "") << "  status\n";
  std::optional<int> first_miss;
  for (const auto& r : rows) {
    out << r.k << "  " << r.oracle << "  " << r.formula;
    if (r.printed) out << "  " << *r.printed;
    out << "  " << (r.match ? "match" : "MISMATCH") << '\n';
    if (!r.match && !first_miss) first_miss = r.k;
  }
  if (first_miss) {
    out << "result: disagreement at k=" << *first_miss << '\n';
  } else {
    out << "result: agreement for all k=0.." << kmax << " (evidence, not proof)\n";
  }
  return 0;
}

int cmd_oeis(const Options& o, std::ostream& out) {
  if (!is_oeis_id(o.id)) throw UsageError("--id must look like A000041");
  const PatternSet s = parse_pattern_set(o.patterns);
  SequenceRecord ref;
  if (!o.bfile.empty()) {
    std::ifstream in(o.bfile);
    if (!in) throw UsageError("cannot read " + o.bfile);
    std::stringstream text;
    text << in.rdbuf();
    ref = parse_bfile(text.str(), o.id);
  } else if (o.fetch) {
    auto fetcher = make_https_fetcher();
    ref = fetch_reference(o.id, *fetcher);
  } else {
    ref = builtin_reference(o.id);
  }
  const int kmax = o.kmax.value_or(14);
  const ComparisonReport report = compare(s, ref, kmax, o.shift);
  out << "source: " << (ref.provenance == Provenance::derived ? "derived" : "fetched") << " ("
      << ref.source << "), offset " << ref.offset << '\n';
  out << format_comparison(report);
  return report.all_match ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.svg && o.ascii) throw UsageError("choose one of --svg and --ascii");
  const bool svg = o.svg;
  if (o.object == "fountain") {
    const CoinSet c = fountain_to_coinset(parse_fountain(o.input));
    out << (svg ? render_fountain_svg(c, o.even) : render_fountain_ascii(c, o.even));
  } else if (o.object == "polyomino") {
    const auto q = parse_polyomino(o.input);
    out << (svg ? render_polyomino_svg(q) : render_polyomino_ascii(q));
  } else if (o.object == "ferrers") {
    const auto p = parse_partition(o.input);
    out << (svg ? render_ferrers_svg(p) : render_ferrers_ascii(p));
  } else {
    throw UsageError("unknown object '" + o.object + "'");
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and bijections for indecomposable pattern-avoiding permutations "
               "by inversions",
               "invperm"};
  app.require_subcommand(1);
  app.fallthrough(false);
  Options o;

  auto* count_cmd = app.add_subcommand("count", "Count I_k(patterns)");
  count_cmd->add_option("--patterns", o.patterns, "Comma-separated patterns, e.g. 123,231")
      ->required();
  auto* k_opt = count_cmd->add_option("--k", o.k, "Single k");
  auto* kmax_opt = count_cmd->add_option("--kmax", o.kmax, "Counts for k = 0..kmax");
  k_opt->excludes(kmax_opt);
  count_cmd->add_option("--method", o.method,
                        "auto, oracle, recurrence_321, recurrence_123, recurrence_gorenstein, "
                        "gf:<name> or closed_form:<name>");
  count_cmd->add_option("--format", o.format)->check(CLI::IsMember({"table", "csv", "json"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "List I_k(patterns) or an object family");
  enum_cmd->add_option("--patterns", o.patterns);
  enum_cmd->add_option("--family", o.family,
                       "partitions, distinct_partitions, equal_partitions, gorenstein, "
                       "almost_triangular, fountains, even_fountains, polyominoes");
  enum_cmd->add_option("--k", o.k)->required();
  enum_cmd->add_option("--limit", o.limit, "Abort when more items would be produced");

  auto* map_cmd = app.add_subcommand("map", "Apply a bijection");
  map_cmd->add_option("--bijection", o.bijection)
      ->required()
      ->check(CLI::IsMember({"132-partition", "231-fountain", "321-polyomino", "even-fountain",
                             "gorenstein-composition"}));
  map_cmd->add_option("--dir", o.dir)->check(CLI::IsMember({"fwd", "inv"}));
  map_cmd->add_option("--input", o.input)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check every fast path against the oracle");
  verify_cmd->add_option("--kmax", o.kmax, "Default 9");
  verify_cmd->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "bijections", "counts"}));

  auto* conj_cmd = app.add_subcommand("conjecture", "Compare a conjectured count with the oracle");
  conj_cmd->add_option("--name", o.conjecture)
      ->required()
      ->check(CLI::IsMember({"132-4321", "321-1342"}));
  conj_cmd->add_option("--kmax", o.kmax, "Default 12, at most 14");

  auto* oeis_cmd = app.add_subcommand("oeis", "Compare counts with a reference sequence");
  oeis_cmd->add_option("--id", o.id)->required();
  oeis_cmd->add_option("--patterns", o.patterns)->required();
  oeis_cmd->add_option("--kmax", o.kmax, "Default 14");
  auto* fetch_flag = oeis_cmd->add_flag("--fetch", o.fetch, "Download the b-file from oeis.org");
  oeis_cmd->add_option("--bfile", o.bfile, "Read a local b-file")->excludes(fetch_flag);
  oeis_cmd->add_option("--shift", o.shift, "Compare k with reference index k + shift");

  auto* render_cmd = app.add_subcommand("render", "Draw a fountain, polyomino or Ferrers diagram");
  render_cmd->add_option("--object", o.object)
      ->required()
      ->check(CLI::IsMember({"fountain", "polyomino", "ferrers"}));
  render_cmd->add_option("--input", o.input)->required();
  render_cmd->add_flag("--svg", o.svg);
  render_cmd->add_flag("--ascii", o.ascii);
  render_cmd->add_flag("--even", o.even, "Colour counted rows of a fountain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (enum_cmd->parsed()) return cmd_enumerate(o, out);
    if (map_cmd->parsed()) return cmd_map(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (conj_cmd->parsed()) return cmd_conjecture(o, out);
    if (oeis_cmd->parsed()) return cmd_oeis(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CacheConflict& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("invperm");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace invperm
