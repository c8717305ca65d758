#pragma once

// Minimal static SVG plots. The viewBox is the data window itself (y
// negated so that it grows upwards); marker sizes are given in pixels.

#include <optional>
#include <string>
#include <vector>

#include "rotwidth/planar.hpp"

namespace rotwidth {

class SvgPlot {
 public:
  /// Data window [x0, x1] x [y0, y1]; y grows upwards in the output.
  SvgPlot(double x0, double x1, double y0, double y1, int pixels = 480);

  void polygon(const std::vector<Vec2>& vertices, const std::string& stroke,
               const std::string& fill = "none", bool dashed = false);
  void polyline(const std::vector<Vec2>& points, const std::string& stroke);
  void points(const std::vector<Vec2>& pts, const std::string& fill, double radius = 2.0);
  void label(Vec2 at, const std::string& text);

  /// Timestamp comment; omitted from output when never set.
  void set_meta(std::string meta) { meta_ = std::move(meta); }

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::string px(Vec2 p) const;
  double unit() const { return (x1_ - x0_) / w_; }  // data units per pixel

  double x0_, x1_, y0_, y1_;
  int w_, h_;
  std::vector<std::string> items_;
  std::optional<std::string> meta_;
};

}  // namespace rotwidth
