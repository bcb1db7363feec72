#pragma once

#include <string>

#include "invperm/objects.hpp"

namespace invperm {

// ASCII drawings use two characters per coin or cell and end with a newline.
// Rows are printed top first. SVG output is a complete standalone document.

/// Coins are "()" and each row is shifted half a coin right of the row
/// below. With `even`, coins on even rows (not counted) are drawn "{}".
std::string render_fountain_ascii(const CoinSet& c, bool even = false);
/// Coins on odd rows are filled red and even rows black when `even` is set;
/// otherwise every coin is grey.
std::string render_fountain_svg(const CoinSet& c, bool even = false);

/// Row i covers columns lower[i] .. upper[i] - 1; cells are "[]".
std::string render_polyomino_ascii(const ParallelogramPolyomino& q);
std::string render_polyomino_svg(const ParallelogramPolyomino& q);

/// English convention: largest part on top, cells "[]".
std::string render_ferrers_ascii(const Partition& p);
std::string render_ferrers_svg(const Partition& p);

}  // namespace invperm
