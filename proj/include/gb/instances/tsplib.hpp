#pragma once

#include <string>
#include <vector>

#include "gb/problems/tsp.hpp"

namespace gb::io {

// Parses TSPLIB text (TSP or ATSP). Supported weight types: EUC_2D with
// NODE_COORD_SECTION (nearest-integer distances), and EXPLICIT with
// FULL_MATRIX or UPPER_ROW edge weights. Anything else raises ParseError with
// a precise diagnostic.
problems::TspInstance parse_tsplib(const std::string& text);

problems::TspInstance load_tsplib_file(const std::string& path);

// Parses a TSPLIB .tour file (TOUR_SECTION, 1-based ids, -1 terminator) into
// a 0-based city sequence.
std::vector<int> parse_tour(const std::string& text);

std::vector<int> load_tour_file(const std::string& path);

}  // namespace gb::io
