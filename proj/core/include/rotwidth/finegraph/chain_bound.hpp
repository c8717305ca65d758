#pragma once

// Upper bounds on the asymptotic translation length of a torus map from an
// explicit adjacency chain alpha -> beta -> f(alpha), where alpha is the
// horizontal curve y = 0 and beta a vertical curve.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rotwidth/finegraph/bounds.hpp"
#include "rotwidth/torus/map_expr.hpp"

namespace rotwidth::finegraph {

struct ChainOptions {
  std::int64_t fix_samples = 10000;     // points of alpha checked for being fixed
  std::int64_t curve_vertices = 1024;   // polyline resolution of f(alpha)
  double fix_ulps = 4.0;
};

struct ChainBoundReport {
  TranslationLengthBound bound;
  std::int64_t crossing_count = 0;    // #(f(alpha) meets beta)
  double fix_residual = 0.0;          // worst deviation of the fixing part, in ulps
  std::int64_t fix_samples = 0;
  std::string vertical_part;          // rendered factors applied last
  std::string fixing_part;            // rendered factors that must fix alpha
};

class ChainVerificationError : public std::runtime_error {
 public:
  ChainVerificationError(const std::string& what, std::int64_t crossings, double residual)
      : std::runtime_error(what), crossings_(crossings), residual_(residual) {}
  std::int64_t crossing_count() const { return crossings_; }
  double fix_residual() const { return residual_; }

 private:
  std::int64_t crossings_;
  double residual_;
};

/// Splits f = P o R where P collects the leading vertical-shear factors of a
/// top-level composition. Verifies that R fixes alpha pointwise and that
/// P(alpha) is a simple curve crossing beta exactly once, then returns the
/// bound |f| <= d(alpha, f(alpha)) <= 2. Throws ChainVerificationError.
ChainBoundReport chain_bound(const torus::MapExpr& f, const ChainOptions& opts = {});

/// The chain for v^n o h^n. Requires n >= 1.
ChainBoundReport chain_bound_vnhn(std::int64_t n, const torus::Profile& profile,
                                  const ChainOptions& opts = {});

}  // namespace rotwidth::finegraph
