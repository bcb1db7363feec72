#include "invperm/text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace invperm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

// Text after "name" and an optional '=' or ':'.
std::string_view strip_label(std::string_view s, std::string_view label) {
  s = trim(s);
  if (s.substr(0, label.size()) == label) {
    s.remove_prefix(label.size());
    s = trim(s);
    if (!s.empty() && (s.front() == '=' || s.front() == ':')) s.remove_prefix(1);
  }
  return trim(s);
}

std::pair<std::string_view, std::string_view> split_semicolon(std::string_view text) {
  const auto pos = text.find(';');
  if (pos == std::string_view::npos) {
    throw std::invalid_argument("expected two fields separated by ';'");
  }
  if (text.find(';', pos + 1) != std::string_view::npos) {
    throw std::invalid_argument("expected exactly one ';'");
  }
  return {text.substr(0, pos), text.substr(pos + 1)};
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      const int v = parse_int(token);
      if (v < 0) throw std::invalid_argument("negative value: " + token);
      out.push_back(v);
      token.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::string format_int_list(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  const bool separated = text.find_first_of(", \t\n") != std::string_view::npos;
  if (!separated && text.size() > 1) {
    std::vector<int> word;
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad character in permutation: '" + std::string(1, c) + "'");
      }
      word.push_back(c - '0');
    }
    return Permutation(std::move(word));
  }
  return Permutation(parse_int_list(text));
}

std::string format_permutation(const Permutation& p) {
  return format_int_list(p.values(), " ");
}

PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Permutation> patterns;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto word = trim(text.substr(start, end - start));
    if (word.empty()) throw std::invalid_argument("empty pattern in '" + std::string(text) + "'");
    std::vector<int> values;
    for (char c : word) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad character in pattern: '" + std::string(1, c) + "'");
      }
      values.push_back(c - '0');
    }
    patterns.emplace_back(std::move(values));
    start = end + 1;
  }
  return PatternSet(std::move(patterns));
}

std::string format_pattern_set(const PatternSet& s) {
  std::string out;
  for (const Permutation& t : s.patterns()) {
    if (!out.empty()) out += ',';
    for (int v : t) out += std::to_string(v);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text == "()") return {};
  return Partition(parse_int_list(text));
}

std::string format_partition(const Partition& p) {
  return p.empty() ? "()" : format_int_list(p.parts());
}

Composition parse_composition(std::string_view text) {
  text = trim(text);
  if (text == "()") return {};
  return Composition(parse_int_list(text));
}

std::string format_composition(const Composition& c) {
  return c.size() == 0 ? "()" : format_int_list(c.terms());
}

Fountain parse_fountain(std::string_view text) {
  const auto [head, tail] = split_semicolon(text);
  const int base = parse_int(strip_label(head, "b"));
  return Fountain(base, parse_int_list(strip_label(tail, "missing")));
}

std::string format_fountain(const Fountain& f) {
  return "b=" + std::to_string(f.base()) + "; missing=" + format_int_list(f.missing());
}

ParallelogramPolyomino parse_polyomino(std::string_view text) {
  const auto [head, tail] = split_semicolon(text);
  return ParallelogramPolyomino(parse_int_list(strip_label(head, "l")),
                                parse_int_list(strip_label(tail, "r")));
}

std::string format_polyomino(const ParallelogramPolyomino& q) {
  return "l: " + format_int_list(q.lower()) + "; r: " + format_int_list(q.upper());
}

std::string format_object(const FamilyObject& object) {
  struct Visitor {
    std::string operator()(const Partition& p) const { return format_partition(p); }
    std::string operator()(const Fountain& f) const { return format_fountain(f); }
    std::string operator()(const CoinSet& c) const {
      return format_fountain(coinset_to_fountain(c));
    }
    std::string operator()(const ParallelogramPolyomino& q) const {
      return format_polyomino(q);
    }
  };
  return std::visit(Visitor{}, object);
}

}  // namespace invperm
