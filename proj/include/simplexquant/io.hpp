#pragma once

#include <iosfwd>
#include <string>

#include "simplexquant/core.hpp"

namespace simplexquant {

/// Reads one distribution. Two formats, sniffed by the first non-space
/// character: a JSON array of numbers ("[0.5, 0.25, 0.25]") or
/// whitespace-separated decimal floats. With renormalize the values are
/// treated as a raw histogram and scaled to sum 1. Throws
/// std::runtime_error on malformed input.
Distribution read_distribution(std::istream& in, bool renormalize);

/// As above; path "-" reads standard input.
Distribution read_distribution_file(const std::string& path,
                                    bool renormalize);

/// One line of space-separated %.17g values (round-trips exactly).
std::string format_distribution(const Distribution& dist);

}  // namespace simplexquant
