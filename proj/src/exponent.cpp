#include "exponent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "convergents.hpp"
#include "errors.hpp"

namespace rw {

namespace {

bool level_parity_even(const DirectiveSpec& spec, const ConvergentTable& t, int64_t n) {
  return (spec.start == DirectiveSpec::Start::D ? t.p(n) : t.q(n)).is_even();
}

std::vector<LevelTerm> rote_terms(const DirectiveSpec& spec, const ConvergentTable& t,
                                  int64_t n) {
  std::vector<LevelTerm> out;
  BigInt a(t.a(n + 1));
  bool even_n = level_parity_even(spec, t, n);
  if (even_n) {
    out.push_back({TermTag::M1, a + BigInt(2), 1, -1, 1, 0});
  } else {
    out.push_back({TermTag::M2, a + BigInt(2), 1, -1, 2, 0});
  }
  if (n >= 1 && !even_n && !level_parity_even(spec, t, n - 1) && t.a(n + 1) > 1)
    out.push_back({TermTag::M3, BigInt(3), 2, -1, 1, 1});
  return out;
}

}  // namespace

std::vector<MElement> m_element(const DirectiveSpec& spec, uint64_t level) {
  int64_t n = static_cast<int64_t>(level);
  ConvergentTable t(spec, n);
  std::vector<MElement> out;
  for (const LevelTerm& lt : rote_terms(spec, t, n)) {
    BigInt num = lt.alpha * t.qp(n) + BigInt(lt.beta) * t.qp(n - 1) + BigInt(lt.gamma);
    BigInt den = BigInt(lt.delta) * t.qp(n) + BigInt(lt.eps) * t.qp(n - 1);
    out.push_back({lt.tag, Rational(num, den)});
  }
  return out;
}

ExponentValue critical_exponent(const DirectiveSpec& spec) {
  EmitFn emit = [spec](const ConvergentTable& t, int64_t n) { return rote_terms(spec, t, n); };
  ExponentValue v = certified_supremum(spec, emit);
  if (!v.truncated && !(v.value > Surd(2)))
    throw std::logic_error("critical_exponent: value must exceed 2");
  return v;
}

std::optional<int> classify_small(const DirectiveSpec& spec) {
  if (!spec.exact()) return std::nullopt;
  DirectiveSpec c = spec.canonical();
  if (c.period != std::vector<uint64_t>{2}) return std::nullopt;
  const auto& pre = c.preperiod;
  auto in = [](uint64_t v, std::initializer_list<uint64_t> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  if (c.start == DirectiveSpec::Start::G) {
    if (pre.size() == 1 && in(pre[0], {1, 3})) return 1;
    if (pre.size() == 2 && in(pre[0], {1, 3}) && pre[1] == 4) return 2;
    if (pre.size() == 3 && in(pre[0], {2, 4}) && pre[1] == 1 && in(pre[2], {1, 3})) return 3;
  } else {
    if (pre.size() == 2 && pre[0] == 1 && in(pre[1], {1, 3})) return 4;
  }
  return std::nullopt;
}

namespace {

// deterministic block automaton over exponent symbols; states:
enum BState { kStart = 0, kC = 1, kNeed1 = 2, kS1 = 3, kDead = 4 };

BState bstep(BState s, uint64_t sym) {
  switch (s) {
    case kStart:
      if (sym == 1 || sym == 3) return kC;
      if (sym == 2 || sym == 4) return kS1;
      return kDead;
    case kC:
      if (sym == 2 || sym == 4) return kC;
      if (sym == 3) return kNeed1;
      return kDead;
    case kNeed1:
    case kS1:
      return sym == 1 ? kStart : kDead;
    case kDead:
      return kDead;
  }
  return kDead;
}

bool b_accepting(BState s) { return s == kStart || s == kC; }

// does the run on pre + period^w visit an accepting state infinitely often?
bool buchi_accepts(const std::vector<uint64_t>& pre, const std::vector<uint64_t>& per) {
  BState s = kStart;
  for (uint64_t sym : pre) {
    s = bstep(s, sym);
    if (s == kDead) return false;
  }
  // the automaton is deterministic, so track pass-boundary states until one
  // repeats; acceptance happens iff some pass inside that cycle visits an
  // accepting state
  std::vector<int> first_pass(5, -1);
  std::vector<bool> flags;
  for (int pass = 0;; ++pass) {
    if (first_pass[s] >= 0) {
      for (size_t i = static_cast<size_t>(first_pass[s]); i < flags.size(); ++i)
        if (flags[i]) return true;
      return false;
    }
    first_pass[s] = pass;
    bool visited = b_accepting(s);
    for (uint64_t sym : per) {
      s = bstep(s, sym);
      if (s == kDead) return false;
      if (b_accepting(s)) visited = true;
    }
    flags.push_back(visited);
  }
}

// drop k leading symbols from the eventually periodic stream (pre, per)
void stream_shift(std::vector<uint64_t>& pre, std::vector<uint64_t>& per, size_t k) {
  while (k--) {
    if (!pre.empty()) {
      pre.erase(pre.begin());
    } else {
      std::rotate(per.begin(), per.begin() + 1, per.end());
    }
  }
}

uint64_t stream_at(const std::vector<uint64_t>& pre, const std::vector<uint64_t>& per,
                   size_t i) {
  if (i < pre.size()) return pre[i];
  return per[(i - pre.size()) % per.size()];
}

}  // namespace

BlockParse below_seven_halves(const DirectiveSpec& spec) {
  if (spec.start != DirectiveSpec::Start::G)
    throw ScopeError("below_seven_halves: the 7/2 block criterion covers G-start directives only");
  if (!spec.exact()) throw ModeError("below_seven_halves: spec has no period");

  std::vector<uint64_t> pre = spec.preperiod, per = spec.period;
  bool plain = buchi_accepts(pre, per);
  bool with_l0 = false;
  if (!plain && stream_at(pre, per, 0) == 1 && stream_at(pre, per, 1) == 1 &&
      stream_at(pre, per, 2) == 1) {
    std::vector<uint64_t> pre2 = pre, per2 = per;
    stream_shift(pre2, per2, 3);
    with_l0 = buchi_accepts(pre2, per2);
  }

  BlockParse out;
  out.verdict = plain || with_l0;
  if (!out.verdict) return out;

  // display parse over the preperiod plus two periods
  size_t window = pre.size() + 2 * per.size();
  size_t i = 0;
  if (with_l0) {
    out.blocks.push_back({"L0", {1, 1, 1}, false});
    i = 3;
  }
  ParsedBlock cur;
  BState s = kStart;
  for (; i < window; ++i) {
    uint64_t sym = stream_at(pre, per, i);
    cur.content.push_back(sym);
    s = bstep(s, sym);
    if (s == kStart) {
      cur.tag = cur.content.size() == 2 && (cur.content[0] == 2 || cur.content[0] == 4)
                    ? "L1"
                    : "L2";
      out.blocks.push_back(cur);
      cur = ParsedBlock{};
    }
  }
  if (!cur.content.empty()) {
    cur.tag = "L3";
    cur.repeats_forever = true;
    out.blocks.push_back(cur);
  }
  return out;
}

std::vector<SweepRow> exponent_sweep(const SweepBounds& bounds) {
  std::vector<SweepRow> rows;
  std::set<std::string> seen;
  std::vector<DirectiveSpec::Start> starts;
  if (bounds.start_filter != 1) starts.push_back(DirectiveSpec::Start::G);
  if (bounds.start_filter != 0) starts.push_back(DirectiveSpec::Start::D);

  // odometer over exponent lists of a given length
  auto lists = [&](uint32_t len) {
    std::vector<std::vector<uint64_t>> out;
    if (len == 0) {
      out.push_back({});
      return out;
    }
    std::vector<uint64_t> cur(len, 1);
    for (;;) {
      out.push_back(cur);
      size_t i = len;
      while (i > 0 && cur[i - 1] == bounds.max_exponent) cur[--i] = 1;
      if (i == 0) break;
      ++cur[i - 1];
    }
    return out;
  };

  for (DirectiveSpec::Start start : starts) {
    for (uint32_t plen = 1; plen <= bounds.max_period; ++plen) {
      for (const auto& period : lists(plen)) {
        for (uint32_t klen = 0; klen <= bounds.max_preperiod; ++klen) {
          for (const auto& prefix : lists(klen)) {
            DirectiveSpec spec;
            spec.start = start;
            spec.preperiod = prefix;
            spec.period = period;
            DirectiveSpec canon = spec.canonical();
            std::string key = canon.render();
            if (!seen.insert(key).second) continue;
            rows.push_back({canon, critical_exponent(canon)});
          }
        }
      }
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "spec,cr_a,cr_b,cr_c,cr_d,cr_decimal,attained,witness\n";
  for (const SweepRow& row : rows) {
    const Surd& v = row.exponent.value;
    out += row.spec.render();
    out.push_back(',');
    out += v.a().to_decimal();
    out.push_back(',');
    out += v.b().to_decimal();
    out.push_back(',');
    out += v.c().to_decimal();
    out.push_back(',');
    out += v.d().to_decimal();
    out.push_back(',');
    out += v.to_decimal(10);
    out.push_back(',');
    out += row.exponent.attained ? "yes" : "no";
    out.push_back(',');
    if (row.exponent.attained) {
      out += term_tag_name(row.exponent.witness->tag) + "@" +
             std::to_string(row.exponent.witness->level);
    } else if (row.exponent.limit_of) {
      out += "limit:" + term_tag_name(row.exponent.limit_of->tag);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace rw
