#include "rotwidth/torus/map_parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace rotwidth::torus {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Profile profile)
      : s_(text), profile_(std::move(profile)) {}

  MapExpr parse_all() {
    MapExpr e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw MapParseError(pos_, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      fail(pos_ < s_.size() ? "expected '" + std::string(1, c) + "'"
                            : "expected '" + std::string(1, c) +
                                  "' before end of input");
    }
    ++pos_;
  }

  bool atom_start() {
    skip_ws();
    return pos_ < s_.size() &&
           (s_[pos_] == 'V' || s_[pos_] == 'H' || s_[pos_] == 'T' || s_[pos_] == '(');
  }

  MapExpr expr() {
    std::vector<MapExpr> factors;
    if (!atom_start()) {
      fail(pos_ < s_.size() ? "expected V, H, T or '('" : "empty expression");
    }
    while (atom_start()) factors.push_back(factor());
    return MapExpr::compose(std::move(factors));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      pos_ = start;
      fail("exponent out of range");
    }
  }

  Rational number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == '/' || s_[pos_] == '-' || s_[pos_] == '+')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  MapExpr factor() {
    skip_ws();
    const char c = s_[pos_];
    std::optional<MapExpr> atom;
    enum { kShearV, kShearH, kTrans, kGroup } kind;
    Rational ta, tb;
    if (c == 'V' || c == 'H') {
      ++pos_;
      kind = c == 'V' ? kShearV : kShearH;
    } else if (c == 'T') {
      ++pos_;
      expect('(');
      ta = number();
      expect(',');
      tb = number();
      expect(')');
      kind = kTrans;
    } else {
      ++pos_;
      atom = expr();
      expect(')');
      kind = kGroup;
    }
    std::int64_t k = 1;
    if (at('^')) {
      ++pos_;
      const std::size_t kpos = (skip_ws(), pos_);
      k = integer();
      if (kind == kGroup && k < 1) {
        pos_ = kpos;
        fail("group exponent must be >= 1");
      }
    }
    switch (kind) {
      case kShearV:
        return MapExpr::v(k, profile_);
      case kShearH:
        return MapExpr::h(k, profile_);
      case kTrans:
        return MapExpr::translate(ta * Rational(k), tb * Rational(k));
      case kGroup:
        break;
    }
    return MapExpr::power(std::move(*atom), k);
  }

  std::string_view s_;
  Profile profile_;
  std::size_t pos_ = 0;
};

}  // namespace

MapExpr parse_map_expr(std::string_view text, const ProfileLoader& load) {
  Profile profile = Profile::sin_sq();
  std::string_view body = text;
  if (auto at = text.find('@'); at != std::string_view::npos) {
    constexpr std::string_view kTag = "@pl:";
    if (text.substr(at, kTag.size()) != kTag) {
      throw MapParseError(at, "unknown suffix (expected '@pl:<file>') at position " +
                                  std::to_string(at));
    }
    std::string path(text.substr(at + kTag.size()));
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
      path.pop_back();
    if (path.empty()) {
      throw MapParseError(at + kTag.size(), "missing profile path at position " +
                                                std::to_string(at + kTag.size()));
    }
    try {
      profile = load(path);
    } catch (const std::exception& e) {
      throw MapParseError(at + kTag.size(), std::string("cannot load profile: ") + e.what());
    }
    body = text.substr(0, at);
  }
  return Parser(body, std::move(profile)).parse_all();
}

std::string caret_diagnostic(std::string_view text, const MapParseError& e) {
  return std::string(text) + "\n" + std::string(e.position(), ' ') + "^\n";
}

}  // namespace rotwidth::torus
