#pragma once

// Polygon text format: one vertex per line, two whitespace-separated
// rationals ("p/q", integers or decimals). '#' starts a comment; blank
// lines are ignored.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rotwidth/lattice/geometry.hpp"

namespace rotwidth::lattice {

class PolygonParseError : public std::runtime_error {
 public:
  PolygonParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<Point2Q> parse_points(std::string_view text);
ConvexPolygonQ parse_polygon(std::string_view text);
ConvexPolygonQ read_polygon_file(const std::string& path);

/// Canonical form: hull vertices in order, reduced fractions.
std::string format_polygon(const ConvexPolygonQ& c);
void write_polygon_file(const std::string& path, const ConvexPolygonQ& c);

}  // namespace rotwidth::lattice
