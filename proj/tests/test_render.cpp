#include <doctest.h>

#include <algorithm>
#include <string>

#include "invperm/render.hpp"

using namespace invperm;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("fountain drawings") {
  const CoinSet c = fountain_to_coinset(Fountain(3, {1, 0, 0}));
  CHECK_EQ(render_fountain_ascii(c), " ()()\n()()()\n");
  const CoinSet tall = fountain_to_coinset(Fountain(3, {0, 0, 0}));
  CHECK_EQ(render_fountain_ascii(tall, true), "  ()\n {}{}\n()()()\n");
  CHECK_EQ(render_fountain_ascii(CoinSet()), "(empty)\n");
}

TEST_CASE("fountain svg marks counted rows") {
  const CoinSet f = fountain_to_coinset(Fountain(8, {5, 3, 3, 3, 3, 2, 0, 0}));
  const std::string plain = render_fountain_svg(f);
  CHECK_EQ(plain.rfind("<svg", 0), 0);
  CHECK_EQ(occurrences(plain, "<circle"), static_cast<std::size_t>(f.size()));
  const std::string even = render_fountain_svg(f, true);
  CHECK_EQ(occurrences(even, "#c0392b"), static_cast<std::size_t>(even_size(f)));
  CHECK_EQ(occurrences(even, "#1b1b1b"), static_cast<std::size_t>(f.size() - even_size(f)));
  CHECK_NE(even.find("</svg>"), std::string::npos);
  CHECK_EQ(render_fountain_svg(f, true), even);
}

TEST_CASE("polyomino drawings") {
  const ParallelogramPolyomino q({0, 1}, {2, 3});
  CHECK_EQ(render_polyomino_ascii(q), "  [][]\n[][]\n");
  const ParallelogramPolyomino fig({0, 1, 1, 3, 3}, {3, 4, 4, 4, 6});
  const std::string art = render_polyomino_ascii(fig);
  CHECK_EQ(occurrences(art, "[]"), 13);
  CHECK_EQ(std::count(art.begin(), art.end(), '\n'), 5);
  CHECK_EQ(occurrences(render_polyomino_svg(fig), "<rect"), 13);
  CHECK_EQ(render_polyomino_ascii(ParallelogramPolyomino()), "(empty)\n");
}

TEST_CASE("ferrers drawings") {
  CHECK_EQ(render_ferrers_ascii(Partition({3, 1})), "[][][]\n[]\n");
  CHECK_EQ(render_ferrers_ascii(Partition()), "(empty)\n");
  CHECK_EQ(occurrences(render_ferrers_svg(Partition({7, 4, 4, 4, 2, 2, 1})), "<rect"), 24);
}
