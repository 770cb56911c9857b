#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "camix/errors.hpp"
#include "camix/event.hpp"
#include "camix/rule.hpp"

namespace camix {

// Text formats:
//   rule     m=<m>;range=<lo>..<hi>;coeffs=<c>,<c>,...
//   cylinder @<offset>:[<s>,<s>,...]
//   measure  <count>/<m>^<width>
//   rational <num>/<den>, or just <num> when the denominator is 1
// Whitespace is insignificant on input. Every parse failure, including a
// structurally valid string that violates a constructor contract, surfaces
// as ParseError so drivers can map it to a configuration error.

namespace detail {

inline std::string strip_ws(const std::string& s) {
  std::string r;
  r.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  return r;
}

// Parses a decimal integer (optional sign) from s starting at pos; advances
// pos past it.
inline std::int64_t take_int(const std::string& s, std::size_t& pos, const std::string& what) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits)
    throw ParseError("expected an integer for " + what + " at position " +
                     std::to_string(start) + " of \"" + s + "\"");
  try {
    return std::stoll(s.substr(start, pos - start));
  } catch (const std::exception&) {
    throw ParseError(what + " out of range in \"" + s + "\"");
  }
}

inline void expect(const std::string& s, std::size_t& pos, const std::string& token) {
  if (s.compare(pos, token.size(), token) != 0)
    throw ParseError("expected \"" + token + "\" at position " + std::to_string(pos) +
                     " of \"" + s + "\"");
  pos += token.size();
}

inline std::vector<Symbol> take_int_list(const std::string& s, std::size_t& pos,
                                         const std::string& what) {
  std::vector<Symbol> out;
  out.push_back(take_int(s, pos, what));
  while (pos < s.size() && s[pos] == ',') {
    ++pos;
    out.push_back(take_int(s, pos, what));
  }
  return out;
}

}  // namespace detail

inline AdditiveRule parse_rule(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  std::size_t pos = 0;
  detail::expect(s, pos, "m=");
  const std::int64_t m = detail::take_int(s, pos, "modulus");
  detail::expect(s, pos, ";range=");
  const std::int64_t lo = detail::take_int(s, pos, "range low end");
  detail::expect(s, pos, "..");
  const std::int64_t hi = detail::take_int(s, pos, "range high end");
  detail::expect(s, pos, ";coeffs=");
  const std::vector<Symbol> coeffs = detail::take_int_list(s, pos, "coefficient");
  if (pos != s.size())
    throw ParseError("trailing characters after rule: \"" + s.substr(pos) + "\"");
  try {
    return make_rule(m, lo, hi, coeffs);
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_rule(const AdditiveRule& rule) {
  std::string s = "m=" + std::to_string(rule.modulus()) +
                  ";range=" + std::to_string(rule.range_lo()) + ".." +
                  std::to_string(rule.range_hi()) + ";coeffs=";
  for (std::size_t k = 0; k < rule.coeffs().size(); ++k) {
    if (k > 0) s.push_back(',');
    s += std::to_string(rule.coeffs()[k]);
  }
  return s;
}

// Cylinder text only; the modulus comes from context.
inline AffineEvent parse_event(const std::string& text, Symbol m) {
  const std::string s = detail::strip_ws(text);
  std::size_t pos = 0;
  detail::expect(s, pos, "@");
  const std::int64_t offset = detail::take_int(s, pos, "offset");
  detail::expect(s, pos, ":[");
  const std::vector<Symbol> symbols = detail::take_int_list(s, pos, "symbol");
  detail::expect(s, pos, "]");
  if (pos != s.size())
    throw ParseError("trailing characters after event: \"" + s.substr(pos) + "\"");
  try {
    return make_cylinder(m, offset, symbols);
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

// Cylinders round-trip through the input syntax; a general affine event gets
// a window/rank summary instead.
inline std::string format_event(const AffineEvent& event) {
  const bool cylinder =
      event.rows() == event.width() && event.matrix() == IntMatrix::identity(event.width());
  if (cylinder) {
    std::string s = "@" + std::to_string(event.window_lo()) + ":[";
    for (std::size_t k = 0; k < event.rhs().size(); ++k) {
      if (k > 0) s.push_back(',');
      s += std::to_string(event.rhs()[k]);
    }
    return s + "]";
  }
  return "affine@[" + std::to_string(event.window_lo()) + "," +
         std::to_string(event.window_hi()) + "]:rows=" + std::to_string(event.rows());
}

inline std::string format_measure(const ExactMeasure& mu) {
  return to_string(mu.count) + "/" + std::to_string(mu.modulus) + "^" +
         std::to_string(mu.width);
}

inline ExactMeasure parse_measure(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  std::size_t pos = 0;
  std::size_t slash = s.find('/');
  if (slash == std::string::npos || slash == 0)
    throw ParseError("measure \"" + s + "\" is not of the form count/m^width");
  BigInt count;
  try {
    count = BigInt(s.substr(0, slash));
  } catch (const std::exception&) {
    throw ParseError("bad count in measure \"" + s + "\"");
  }
  pos = slash + 1;
  const std::int64_t m = detail::take_int(s, pos, "modulus");
  detail::expect(s, pos, "^");
  const std::int64_t width = detail::take_int(s, pos, "width");
  if (pos != s.size())
    throw ParseError("trailing characters after measure: \"" + s.substr(pos) + "\"");
  if (m < 2) throw ParseError("measure modulus " + std::to_string(m) + " is below 2");
  if (width < 0) throw ParseError("measure width is negative");
  if (count < 0) throw ParseError("measure count is negative");
  return ExactMeasure{m, static_cast<std::uint64_t>(width), count};
}

inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return to_string(q);
}

inline Rational parse_rational(const std::string& text) {
  const std::string s = detail::strip_ws(text);
  const auto integer = [&s](const std::string& part) {
    std::size_t digits_from = part.size() > 0 && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (part.size() == digits_from)
      throw ParseError("bad rational \"" + s + "\"");
    for (std::size_t k = digits_from; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9')
        throw ParseError("bad rational \"" + s + "\"");
    return BigInt(part);
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer(s));
  const BigInt num = integer(s.substr(0, slash));
  const BigInt den = integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("rational \"" + s + "\" has denominator 0");
  return Rational(num, den);
}

// Shortest-faithful decimal companion for a rational; never authoritative.
inline std::string format_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", q.convert_to<double>());
  return buf;
}

}  // namespace camix
