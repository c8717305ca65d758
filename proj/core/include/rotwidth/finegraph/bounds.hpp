#pragma once

// Translation-length bounds, the width lower-bound constants, and the
// no-root certificate.

#include <string>
#include <string_view>
#include <vector>

#include "rotwidth/rational.hpp"

namespace rotwidth::finegraph {

struct TranslationLengthBound {
  enum class Kind { kUpper, kLower };
  enum class Source { kAdjacencyChain, kWidthInequality, kImportedConstant };

  Kind kind = Kind::kUpper;
  Rational value;
  Source source = Source::kAdjacencyChain;
};

std::string to_string(TranslationLengthBound::Kind k);
std::string to_string(TranslationLengthBound::Source s);

/// 1 / max(888 c, 1110). Throws std::invalid_argument for c <= 0.
Rational m_bound(const Rational& c);

/// m_bound(c) * ew for 0 < ew <= c.
TranslationLengthBound length_lower_bound(const Rational& ew, const Rational& c);

struct ImportedConstant {
  Rational value;
  std::string note;
};

/// Lower bound 1/222 on the translation length of the reference
/// pseudo-Anosov map, taken from the literature (not recomputed here).
ImportedConstant t0_constant();

enum class RootVerdict { kNoRootsAboveThreshold, kInconclusive };

std::string to_string(RootVerdict v);

struct RootCertificate {
  Rational ew;
  Rational length_upper;
  Rational threshold;
  RootVerdict verdict = RootVerdict::kInconclusive;
  std::vector<std::string> transcript;
};

/// If length_upper < m_1 ew, no p/q-th root with p/q >= ew exists.
/// Requires ew > 0 and length_upper >= 0.
RootCertificate certify_no_roots(const Rational& ew, const Rational& length_upper);

/// Plain-text transcript ending with "VERDICT: <verdict> THRESHOLD: <p/q>".
std::string format_certificate(const RootCertificate& c);

/// Inverse of format_certificate. Throws std::invalid_argument.
RootCertificate parse_certificate(std::string_view text);

/// Re-evaluates every CHECK line of the transcript in exact arithmetic and
/// confirms the verdict follows from them.
bool recheck_certificate(const RootCertificate& c);

}  // namespace rotwidth::finegraph
