#ifndef SMASHFRAME_LITERALS_HPP
#define SMASHFRAME_LITERALS_HPP

// Textual literals:
//   chain          empty | [lo,hi];[lo,hi];...        (ascending)
//   group element  comma-separated components, each  num | num/ell^exp
//   polynomial     0 | term+term+..., term = [coef*]t^(group), coef = int | a/b
// Parsers throw PARSE_CHAIN / PARSE_GROUP / PARSE_POLY on malformed syntax;
// semantic violations surface through the module validators.

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "smashframe/error.hpp"
#include "smashframe/frame.hpp"
#include "smashframe/ring_model.hpp"
#include "smashframe/value_group.hpp"

namespace smashframe {

inline std::string format_chain(const Chain& x) {
  if (x.empty()) return "empty";
  std::string out;
  for (const Interval& iv : x) {
    if (!out.empty()) out += ";";
    out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline long long parse_ll(std::string_view s, const std::string& code, const std::string& what) {
  s = trim(s);
  require(!s.empty(), code, what + ": empty number");
  std::string buf(s);
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(buf.c_str(), &end, 10);
  require(errno == 0 && end == buf.c_str() + buf.size(), code, what + ": bad number '" + buf + "'");
  return v;
}

}  // namespace detail

// Parses the chain literal and validates it against the given descriptor.
inline Chain parse_chain(const RingSpec& s, std::string_view text) {
  std::string_view body = detail::trim(text);
  require(!body.empty(), "PARSE_CHAIN", "empty chain literal");
  if (body == "empty") return Chain{};
  Chain out;
  for (std::string_view part : detail::split(body, ';')) {
    part = detail::trim(part);
    require(part.size() >= 5 && part.front() == '[' && part.back() == ']', "PARSE_CHAIN",
            "expected [lo,hi], got '" + std::string(part) + "'");
    auto nums = detail::split(part.substr(1, part.size() - 2), ',');
    require(nums.size() == 2, "PARSE_CHAIN",
            "expected [lo,hi], got '" + std::string(part) + "'");
    long long lo = detail::parse_ll(nums[0], "PARSE_CHAIN", "interval endpoint");
    long long hi = detail::parse_ll(nums[1], "PARSE_CHAIN", "interval endpoint");
    require(lo >= -1000000 && lo <= 1000000 && hi >= -1000000 && hi <= 1000000,
            "PARSE_CHAIN", "interval endpoint out of range");
    out.push_back(Interval{static_cast<int>(lo), static_cast<int>(hi)});
  }
  require_chain(s, out);
  return out;
}

inline std::string format_component(const RingSpec& s, const LFraction& c) {
  if (c.exp == 0) return std::to_string(c.num);
  return std::to_string(c.num) + "/" + std::to_string(s.ell) + "^" + std::to_string(c.exp);
}

inline std::string format_group(const RingSpec& s, const GroupElement& v) {
  std::string out;
  for (std::size_t i = 0; i < v.comp.size(); ++i) {
    if (i) out += ",";
    out += format_component(s, v.comp[i]);
  }
  return out;
}

inline GroupElement parse_group(const RingSpec& s, std::string_view text) {
  auto parts = detail::split(detail::trim(text), ',');
  require(parts.size() == static_cast<std::size_t>(s.n), "PARSE_GROUP",
          "expected " + std::to_string(s.n) + " components, got " +
              std::to_string(parts.size()));
  GroupElement v;
  for (std::string_view part : parts) {
    part = detail::trim(part);
    auto slash = part.find('/');
    if (slash == std::string_view::npos) {
      v.comp.push_back(lf_make(detail::parse_ll(part, "PARSE_GROUP", "component"), 0, s.ell));
      continue;
    }
    long long num = detail::parse_ll(part.substr(0, slash), "PARSE_GROUP", "component");
    std::string_view denom = part.substr(slash + 1);
    auto caret = denom.find('^');
    require(caret != std::string_view::npos, "PARSE_GROUP",
            "expected num/ell^exp, got '" + std::string(part) + "'");
    long long base = detail::parse_ll(denom.substr(0, caret), "PARSE_GROUP", "denominator base");
    long long exp = detail::parse_ll(denom.substr(caret + 1), "PARSE_GROUP", "denominator exponent");
    require(base == s.ell, "PARSE_GROUP",
            "denominator base " + std::to_string(base) + " differs from ell = " +
                std::to_string(s.ell));
    require(exp >= 0 && exp <= 62, "PARSE_GROUP", "denominator exponent out of range");
    v.comp.push_back(lf_make(num, static_cast<int>(exp), s.ell));
  }
  validate_group_element(s, v);
  return v;
}

inline std::string format_rat(const Rat& r) {
  if (r.q == 1) return std::to_string(r.p);
  return std::to_string(r.p) + "/" + std::to_string(r.q);
}

inline std::string format_poly(const RingSpec& s, const HahnPoly& f) {
  if (poly_is_zero(f)) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms) {
    if (!out.empty()) out += "+";
    out += format_rat(c) + "*t^(" + format_group(s, e) + ")";
  }
  return out;
}

inline HahnPoly parse_poly(const RingSpec& s, std::string_view text) {
  std::string_view body = detail::trim(text);
  require(!body.empty(), "PARSE_POLY", "empty polynomial literal");
  HahnPoly f(s);
  if (body == "0") return f;
  for (std::string_view term : detail::split(body, '+')) {
    term = detail::trim(term);
    Rat coef{1, 1};
    auto star = term.find('*');
    if (star != std::string_view::npos) {
      std::string_view c = detail::trim(term.substr(0, star));
      auto slash = c.find('/');
      if (slash == std::string_view::npos) {
        coef = rat_make(detail::parse_ll(c, "PARSE_POLY", "coefficient"), 1);
      } else {
        coef = rat_make(detail::parse_ll(c.substr(0, slash), "PARSE_POLY", "coefficient"),
                        detail::parse_ll(c.substr(slash + 1), "PARSE_POLY", "coefficient"));
      }
      term = detail::trim(term.substr(star + 1));
    }
    require(term.size() >= 5 && term.substr(0, 3) == "t^(" && term.back() == ')', "PARSE_POLY",
            "expected t^(components), got '" + std::string(term) + "'");
    GroupElement g = parse_group(s, term.substr(3, term.size() - 4));
    poly_add_term(s, f, g, coef);
  }
  return f;
}

}  // namespace smashframe

#endif
