#pragma once

// SVG 1.1 drawing of a tiling: marked points clockwise from the top, arcs
// as chords, short arcs bowed towards the centre, isolated points hollow.

#include <optional>
#include <string>

#include "mrigid/disc.hpp"

namespace mrigid {

/// With m given, arcs cutting off exactly m+1 points on one side are drawn
/// as short arcs. Output depends only on the arguments.
std::string render_svg(const AbstractTiling& tiling, std::optional<int> m = std::nullopt);

}  // namespace mrigid
