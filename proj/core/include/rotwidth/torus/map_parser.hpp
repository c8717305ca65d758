#pragma once

// Map DSL.
//
//   map    := expr ('@pl:' path)?
//   expr   := factor+                       juxtaposition, right to left
//   factor := atom ('^' int)?
//   atom   := 'V' | 'H' | 'T' '(' num ',' num ')' | '(' expr ')'
//
// "V^3 H^3" is v^3 o h^3. Numbers are integers, "p/q" or decimals. The
// optional @pl: suffix selects a piecewise-linear profile file for every
// shear; the default profile is sin^2.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rotwidth/torus/map_expr.hpp"

namespace rotwidth::torus {

class MapParseError : public std::runtime_error {
 public:
  MapParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg), pos_(pos) {}
  /// 0-based offset into the input where parsing failed.
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

using ProfileLoader = std::function<Profile(const std::string& path)>;

MapExpr parse_map_expr(std::string_view text,
                       const ProfileLoader& load = Profile::load_piecewise_linear);

/// Two-line rendering of a parse error: the input and a caret under the
/// failing position.
std::string caret_diagnostic(std::string_view text, const MapParseError& e);

}  // namespace rotwidth::torus
