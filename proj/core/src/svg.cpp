#include "rotwidth/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rotwidth {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(double x0, double x1, double y0, double y1, int pixels)
    : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
  if (!(x1 > x0) || !(y1 > y0) || pixels < 16) {
    throw std::invalid_argument("empty plot window");
  }
  const double aspect = (y1 - y0) / (x1 - x0);
  w_ = pixels;
  h_ = std::max(16, static_cast<int>(pixels * aspect));
}

std::string SvgPlot::px(Vec2 p) const {
  return fmt(p.x) + "," + fmt(-p.y);
}

void SvgPlot::polygon(const std::vector<Vec2>& vertices, const std::string& stroke,
                      const std::string& fill, bool dashed) {
  if (vertices.empty()) return;
  std::string d = "M" + px(vertices.front());
  for (std::size_t i = 1; i < vertices.size(); ++i) d += " L" + px(vertices[i]);
  d += " Z";
  items_.push_back("<path d=\"" + d + "\" stroke=\"" + stroke + "\" fill=\"" + fill + "\"" +
                   (dashed ? " stroke-dasharray=\"6 4\"" : "") + " stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>");
}

void SvgPlot::polyline(const std::vector<Vec2>& pts, const std::string& stroke) {
  if (pts.empty()) return;
  std::string s;
  for (const Vec2& p : pts) s += (s.empty() ? "" : " ") + px(p);
  items_.push_back("<polyline points=\"" + s + "\" stroke=\"" + stroke +
                   "\" fill=\"none\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>");
}

void SvgPlot::points(const std::vector<Vec2>& pts, const std::string& fill, double radius) {
  for (const Vec2& p : pts) {
    const std::string c = px(p);
    const auto comma = c.find(',');
    items_.push_back("<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) +
                     "\" r=\"" + fmt(radius * unit()) + "\" fill=\"" + fill + "\"/>");
  }
}

void SvgPlot::label(Vec2 at, const std::string& text) {
  const std::string c = px(at);
  const auto comma = c.find(',');
  items_.push_back("<text x=\"" + c.substr(0, comma) + "\" y=\"" + c.substr(comma + 1) +
                   "\" font-size=\"" + fmt(12 * unit()) + "\">" + escape(text) + "</text>");
}

std::string SvgPlot::str() const {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
     << "\" viewBox=\"" << fmt(x0_) << ' ' << fmt(-y1_) << ' ' << fmt(x1_ - x0_) << ' '
     << fmt(y1_ - y0_) << "\" preserveAspectRatio=\"none\">\n";
  if (meta_) os << "<!-- " << escape(*meta_) << " -->\n";
  os << "<rect x=\"" << fmt(x0_) << "\" y=\"" << fmt(-y1_) << "\" width=\"" << fmt(x1_ - x0_)
     << "\" height=\"" << fmt(y1_ - y0_) << "\" fill=\"white\"/>\n";
  for (const std::string& it : items_) os << it << '\n';
  os << "</svg>\n";
  return os.str();
}

void SvgPlot::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << str();
}

}  // namespace rotwidth
