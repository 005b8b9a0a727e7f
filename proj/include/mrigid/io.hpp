#pragma once

// Line-oriented text formats. Blank lines and '#' comments are ignored.
//
//   polygon <N>          vertices <count>
//   arc <i> <j>          arrow <id> <source> <target>
//                        rel <id1> <id2>

#include <istream>
#include <string>

#include "mrigid/disc.hpp"
#include "mrigid/quiver.hpp"

namespace mrigid {

enum class FileKind { kTiling, kQuiver };

/// Kind of a file from its first keyword (InputError if neither).
FileKind detect_kind(const std::string& text);

/// Checks syntax and label ranges only; arcs keep their file order.
AbstractTiling parse_tiling(const std::string& text);
/// Arcs normalized and sorted.
std::string print_tiling(const AbstractTiling& tiling);

Quiver parse_quiver(const std::string& text);
std::string print_quiver(const Quiver& q);

/// Whole stream as a string.
std::string slurp(std::istream& in);

}  // namespace mrigid
