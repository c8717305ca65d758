#include "rotwidth/lattice/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace rotwidth::lattice {

std::vector<Point2Q> parse_points(std::string_view text) {
  std::vector<Point2Q> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2) {
      throw PolygonParseError(lineno, "expected 2 coordinates, got " +
                                          std::to_string(tok.size()));
    }
    try {
      pts.push_back({parse_rational(tok[0]), parse_rational(tok[1])});
    } catch (const std::exception& e) {
      throw PolygonParseError(lineno, e.what());
    }
  }
  if (pts.empty()) throw PolygonParseError(lineno, "no vertices");
  return pts;
}

ConvexPolygonQ parse_polygon(std::string_view text) {
  return convex_hull(parse_points(text));
}

ConvexPolygonQ read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polygon(ss.str());
}

std::string format_polygon(const ConvexPolygonQ& c) {
  std::string out;
  for (const auto& p : c.vertices()) {
    out += p.x.str();
    out += ' ';
    out += p.y.str();
    out += '\n';
  }
  return out;
}

void write_polygon_file(const std::string& path, const ConvexPolygonQ& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_polygon(c);
}

}  // namespace rotwidth::lattice
