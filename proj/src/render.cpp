#include "invperm/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace invperm {

namespace {

constexpr double kUnit = 20.0;
constexpr double kMargin = 4.0;
constexpr double kRowRise = 17.320508;  // kUnit * sqrt(3) / 2

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string svg_open(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

std::string svg_cell(double x, double y) {
  return "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(kUnit) +
         "\" height=\"" + num(kUnit) + "\" fill=\"#f4d03f\" stroke=\"#000000\"/>\n";
}

std::string rows_to_text(const std::vector<std::string>& rows) {
  if (rows.empty()) return "(empty)\n";
  std::string out;
  for (std::string row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

int top_row(const CoinSet& c) {
  int top = 0;
  for (const Coin& coin : c.coins()) top = std::max(top, coin.row);
  return top;
}

}  // namespace

std::string render_fountain_ascii(const CoinSet& c, bool even) {
  const int rows = top_row(c);
  const int width = 2 * c.bottom_width();
  std::vector<std::string> lines;
  for (int row = rows; row >= 1; --row) {
    std::string line(width, ' ');
    for (const Coin& coin : c.coins()) {
      if (coin.row != row) continue;
      const std::size_t col = 2 * (coin.pos - 1) + (row - 1);
      const bool counted = row % 2 == 1;
      line.replace(col, 2, even && !counted ? "{}" : "()");
    }
    lines.push_back(line);
  }
  return rows_to_text(lines);
}

std::string render_fountain_svg(const CoinSet& c, bool even) {
  const int rows = top_row(c);
  const double width = kUnit * std::max(c.bottom_width(), 1) + 2 * kMargin;
  const double height = kUnit + kRowRise * std::max(rows - 1, 0) + 2 * kMargin;
  std::string out = svg_open(width, height);
  const double radius = kUnit / 2 - 0.5;
  for (const Coin& coin : c.coins()) {
    const double cx = kMargin + kUnit / 2 + kUnit * (coin.pos - 1) + kUnit / 2 * (coin.row - 1);
    const double cy = height - kMargin - kUnit / 2 - kRowRise * (coin.row - 1);
    std::string fill = "#9e9e9e";
    if (even) fill = coin.row % 2 == 1 ? "#c0392b" : "#1b1b1b";
    out += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(radius) +
           "\" fill=\"" + fill + "\" stroke=\"#000000\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_polyomino_ascii(const ParallelogramPolyomino& q) {
  std::vector<std::string> lines;
  for (int i = q.rows() - 1; i >= 0; --i) {
    std::string line(2 * q.upper()[i], ' ');
    for (int col = q.lower()[i]; col < q.upper()[i]; ++col) line.replace(2 * col, 2, "[]");
    lines.push_back(line);
  }
  return rows_to_text(lines);
}

std::string render_polyomino_svg(const ParallelogramPolyomino& q) {
  const int columns = q.rows() == 0 ? 1 : q.upper()[q.rows() - 1];
  const double width = kUnit * columns + 2 * kMargin;
  const double height = kUnit * std::max(q.rows(), 1) + 2 * kMargin;
  std::string out = svg_open(width, height);
  for (int i = 0; i < q.rows(); ++i) {
    for (int col = q.lower()[i]; col < q.upper()[i]; ++col) {
      out += svg_cell(kMargin + kUnit * col, height - kMargin - kUnit * (i + 1));
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_ferrers_ascii(const Partition& p) {
  std::vector<std::string> lines;
  for (int part : p.parts()) {
    std::string line;
    for (int j = 0; j < part; ++j) line += "[]";
    lines.push_back(line);
  }
  return rows_to_text(lines);
}

std::string render_ferrers_svg(const Partition& p) {
  const int columns = p.empty() ? 1 : p[0];
  const double width = kUnit * columns + 2 * kMargin;
  const double height = kUnit * std::max(p.size(), 1) + 2 * kMargin;
  std::string out = svg_open(width, height);
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) out += svg_cell(kMargin + kUnit * j, kMargin + kUnit * i);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace invperm
