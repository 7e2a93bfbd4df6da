#include "directive.hpp"

#include <algorithm>
#include <limits>

#include "errors.hpp"

namespace rw {

uint64_t DirectiveSpec::exponent(uint64_t i) const {
  if (i == 0) return 0;
  uint64_t idx = i - 1;
  if (idx < preperiod.size()) return preperiod[idx];
  if (period.empty())
    throw InsufficientDirectiveError("directive truncation exhausted at a_" + std::to_string(i));
  return period[(idx - preperiod.size()) % period.size()];
}

uint64_t DirectiveSpec::known_terms() const {
  return period.empty() ? preperiod.size() : std::numeric_limits<uint64_t>::max();
}

Morphism DirectiveSpec::run_letter(uint64_t i) const {
  bool first = (i % 2) == 1;
  if (start == Start::G) return first ? Morphism::G : Morphism::D;
  return first ? Morphism::D : Morphism::G;
}

namespace {

std::vector<uint64_t> parse_list(std::string_view s, bool allow_empty) {
  std::vector<uint64_t> out;
  if (s.empty()) {
    if (allow_empty) return out;
    throw ParseError("directive: empty exponent list");
  }
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view item =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    if (item.empty()) throw ParseError("directive: empty exponent");
    uint64_t v = 0;
    for (char c : item) {
      if (c < '0' || c > '9') throw ParseError("directive: exponent must be a positive integer");
      if (v > (std::numeric_limits<uint64_t>::max() - 9) / 10)
        throw ParseError("directive: exponent too large");
      v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    if (v == 0) throw ParseError("directive: exponents must be >= 1");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

DirectiveSpec DirectiveSpec::parse(std::string_view s) {
  if (s.size() < 2) throw ParseError("directive: too short");
  DirectiveSpec spec;
  if (s[0] == 'G')
    spec.start = Start::G;
  else if (s[0] == 'D')
    spec.start = Start::D;
  else
    throw ParseError("directive: start letter must be G or D");
  if (s[1] != ':') throw ParseError("directive: expected ':' after start letter");

  std::string_view rest = s.substr(2);
  size_t bar = rest.find('|');
  if (bar == std::string_view::npos) {
    spec.preperiod = parse_list(rest, false);
  } else {
    spec.preperiod = parse_list(rest.substr(0, bar), true);
    spec.period = parse_list(rest.substr(bar + 1), true);
  }
  if (spec.preperiod.empty() && spec.period.empty())
    throw ParseError("directive: no exponents given");
  return spec;
}

std::string DirectiveSpec::render() const {
  std::string out(1, start == Start::G ? 'G' : 'D');
  out.push_back(':');
  for (size_t i = 0; i < preperiod.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(preperiod[i]);
  }
  if (!period.empty()) {
    out.push_back('|');
    for (size_t i = 0; i < period.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(period[i]);
    }
  }
  return out;
}

DirectiveSpec DirectiveSpec::canonical() const {
  DirectiveSpec c = *this;
  if (c.period.empty()) return c;
  // shrink period to its primitive root
  for (size_t len = 1; len <= c.period.size() / 2; ++len) {
    if (c.period.size() % len != 0) continue;
    bool ok = true;
    for (size_t i = len; i < c.period.size() && ok; ++i)
      ok = c.period[i] == c.period[i % len];
    if (ok) {
      c.period.resize(len);
      break;
    }
  }
  // absorb matching tail of the preperiod into a rotated period
  while (!c.preperiod.empty() && c.preperiod.back() == c.period.back()) {
    c.preperiod.pop_back();
    std::rotate(c.period.begin(), c.period.end() - 1, c.period.end());
  }
  return c;
}

}  // namespace rw
