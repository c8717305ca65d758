#include "rotwidth/finegraph/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotwidth::finegraph {

std::string to_string(TranslationLengthBound::Kind k) {
  return k == TranslationLengthBound::Kind::kUpper ? "upper" : "lower";
}

std::string to_string(TranslationLengthBound::Source s) {
  switch (s) {
    case TranslationLengthBound::Source::kAdjacencyChain: return "chain";
    case TranslationLengthBound::Source::kWidthInequality: return "width_inequality";
    case TranslationLengthBound::Source::kImportedConstant: return "imported_constant";
  }
  return "?";
}

Rational m_bound(const Rational& c) {
  if (c.sign() <= 0) throw std::invalid_argument("m_bound needs c > 0, got " + c.str());
  return Rational(1) / std::max(Rational(888) * c, Rational(1110));
}

TranslationLengthBound length_lower_bound(const Rational& ew, const Rational& c) {
  if (ew.sign() <= 0) throw std::invalid_argument("width must be positive, got " + ew.str());
  if (ew > c) {
    throw std::invalid_argument("width " + ew.str() + " exceeds the constant c = " + c.str());
  }
  return {TranslationLengthBound::Kind::kLower, m_bound(c) * ew,
          TranslationLengthBound::Source::kWidthInequality};
}

ImportedConstant t0_constant() {
  return {Rational(1, 222),
          "translation length of the reference pseudo-Anosov map exceeds 1/222 "
          "(imported bound, not recomputed)"};
}

std::string to_string(RootVerdict v) {
  return v == RootVerdict::kNoRootsAboveThreshold ? "no_roots_above_threshold" : "inconclusive";
}

namespace {

constexpr std::string_view kCheck = "CHECK ";
constexpr std::string_view kVerdict = "VERDICT: ";

std::string check_line(const Rational& lhs, const Rational& rhs) {
  return std::string(kCheck) + lhs.str() + " < " + rhs.str() + " : " +
         (lhs < rhs ? "true" : "false");
}

}  // namespace

RootCertificate certify_no_roots(const Rational& ew, const Rational& length_upper) {
  if (ew.sign() <= 0) throw std::invalid_argument("width must be positive");
  if (length_upper.sign() < 0) throw std::invalid_argument("length bound must be >= 0");
  RootCertificate c;
  c.ew = ew;
  c.length_upper = length_upper;
  c.threshold = ew;
  const Rational m1 = m_bound(1);
  const Rational rhs = m1 * ew;
  c.verdict = length_upper < rhs ? RootVerdict::kNoRootsAboveThreshold : RootVerdict::kInconclusive;

  auto& t = c.transcript;
  t.push_back("INPUT ew = " + ew.str());
  t.push_back("INPUT length_upper = " + length_upper.str());
  t.push_back("DERIVE m1 = " + m1.str());
  t.push_back("DERIVE m1*ew = " + rhs.str());
  t.push_back("NOTE let g satisfy g^p = f^q with p/q >= ew");
  t.push_back("NOTE then EW(rho(g)) = (q/p) ew <= 1 and |g| = (q/p) |f| <= (q/p) length_upper");
  t.push_back("NOTE the width lower bound with c = 1 gives m1 (q/p) ew <= (q/p) length_upper");
  t.push_back("NOTE so a root forces m1 ew <= length_upper");
  t.push_back("NOTE the open-set argument over weak-conjugacy classes is not machine-checked");
  t.push_back(check_line(length_upper, rhs));
  return c;
}

std::string format_certificate(const RootCertificate& c) {
  std::ostringstream os;
  for (const std::string& line : c.transcript) os << line << '\n';
  os << kVerdict << to_string(c.verdict) << " THRESHOLD: " << c.threshold.str() << '\n';
  return os.str();
}

RootCertificate parse_certificate(std::string_view text) {
  RootCertificate c;
  bool have_ew = false, have_len = false, have_verdict = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(kVerdict, 0) == 0) {
      std::istringstream ls(line.substr(kVerdict.size()));
      std::string verdict, tag, threshold;
      ls >> verdict >> tag >> threshold;
      if (tag != "THRESHOLD:") throw std::invalid_argument("malformed verdict line");
      if (verdict == "no_roots_above_threshold") {
        c.verdict = RootVerdict::kNoRootsAboveThreshold;
      } else if (verdict == "inconclusive") {
        c.verdict = RootVerdict::kInconclusive;
      } else {
        throw std::invalid_argument("unknown verdict '" + verdict + "'");
      }
      c.threshold = parse_rational(threshold);
      have_verdict = true;
      continue;
    }
    if (line.rfind("INPUT ew = ", 0) == 0) {
      c.ew = parse_rational(line.substr(11));
      have_ew = true;
    } else if (line.rfind("INPUT length_upper = ", 0) == 0) {
      c.length_upper = parse_rational(line.substr(21));
      have_len = true;
    }
    c.transcript.push_back(line);
  }
  if (!have_ew || !have_len || !have_verdict) {
    throw std::invalid_argument("certificate is missing inputs or the verdict line");
  }
  return c;
}

bool recheck_certificate(const RootCertificate& c) {
  if (c.ew.sign() <= 0 || c.length_upper.sign() < 0 || c.threshold != c.ew) return false;
  const Rational m1 = m_bound(1);
  bool saw_key_check = false;
  for (const std::string& line : c.transcript) {
    if (line.rfind("DERIVE m1 = ", 0) == 0 && parse_rational(line.substr(12)) != m1) return false;
    if (line.rfind("DERIVE m1*ew = ", 0) == 0 && parse_rational(line.substr(15)) != m1 * c.ew) {
      return false;
    }
    if (line.rfind(kCheck, 0) != 0) continue;
    std::istringstream ls(line.substr(kCheck.size()));
    std::string lhs, op, rhs, colon, claim;
    ls >> lhs >> op >> rhs >> colon >> claim;
    if (op != "<" || colon != ":") return false;
    const Rational l = parse_rational(lhs), r = parse_rational(rhs);
    if ((l < r) != (claim == "true")) return false;
    if (l == c.length_upper && r == m1 * c.ew) {
      saw_key_check = true;
      if ((c.verdict == RootVerdict::kNoRootsAboveThreshold) != (l < r)) return false;
    }
  }
  return saw_key_check;
}

}  // namespace rotwidth::finegraph
