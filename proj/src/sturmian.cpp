#include "sturmian.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace rw {

namespace {

BinaryWord apply_morphism(Morphism m, const BinaryWord& w) {
  BinaryWord out;
  if (m == Morphism::G) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i]) {
        out.push_back(1);
      } else {
        out.push_back(1);
        out.push_back(0);
      }
    }
  } else {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i]) {
        out.push_back(0);
        out.push_back(1);
      } else {
        out.push_back(0);
      }
    }
  }
  return out;
}

// X^copies prepended to tail, truncated to cap letters
BinaryWord repeat_prepend(const BinaryWord& block, uint64_t copies, const BinaryWord& tail,
                          uint64_t cap) {
  BinaryWord out;
  for (uint64_t i = 0; i < copies && out.size() < cap; ++i) out.append(block);
  out.append(tail);
  out.truncate(cap);
  return out;
}

size_t common_prefix(const BinaryWord& x, const BinaryWord& y) {
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i)
    if (x[i] != y[i]) return i;
  return n;
}

}  // namespace

Decomposition decompose(const DirectiveSpec& spec, uint64_t n) {
  uint64_t total = 0, level = 0;
  for (;;) {
    uint64_t next = spec.exponent(level + 1);
    if (n - total < next) break;
    total += next;
    ++level;
  }
  if (!spec.exact()) spec.exponent(level + 2);  // truncation must cover level N+2
  return {level, n - total};
}

BinaryWord generate_prefix(const DirectiveSpec& spec, uint64_t length) {
  if (length == 0) throw std::domain_error("generate_prefix: length must be >= 1");
  const uint64_t cap = length;
  BinaryWord x = BinaryWord::single(0);  // image of 0 under the applied runs
  BinaryWord y = BinaryWord::single(1);  // image of 1
  Morphism last = Morphism::G;
  uint64_t runs = 0;
  for (uint64_t i = 1;; ++i) {
    uint64_t h;
    try {
      h = spec.exponent(i);
    } catch (const InsufficientDirectiveError&) {
      break;
    }
    Morphism letter = spec.run_letter(i);
    if (letter == Morphism::G) {
      x = repeat_prepend(y, h, x, cap);  // G^h: 0 -> 1^h-images... X <- Y^h X
    } else {
      y = repeat_prepend(x, h, y, cap);  // D^h: Y <- X^h Y
    }
    last = letter;
    ++runs;
    if (common_prefix(x, y) >= length) {
      x.truncate(length);
      return x;
    }
  }
  // finite truncation: the next run letter alternates, so the sequence under
  // the missing levels starts with a known letter; its image is exact
  if (runs == 0) throw InsufficientDirectiveError("generate_prefix: empty directive");
  BinaryWord& seed_image = (last == Morphism::G) ? x : y;
  if (seed_image.size() < length)
    throw InsufficientDirectiveError("generate_prefix: truncation too short for prefix");
  seed_image.truncate(length);
  return seed_image;
}

BispecialRecord bispecial(const DirectiveSpec& spec, uint64_t n) {
  Decomposition dec = decompose(spec, n);
  int64_t N = static_cast<int64_t>(dec.level);
  ConvergentTable t(spec, N);
  BigInt m(dec.offset);

  BispecialRecord rec;
  rec.n = n;
  rec.level = dec.level;
  rec.offset = dec.offset;

  BigInt r0 = t.p(N), r1 = t.q(N);
  BigInt s0 = m * t.p(N) + t.p(N - 1);
  BigInt s1 = m * t.q(N) + t.q(N - 1);
  BigInt b0 = (m + BigInt(1)) * t.p(N) + t.p(N - 1) - BigInt(1);
  BigInt b1 = (m + BigInt(1)) * t.q(N) + t.q(N - 1) - BigInt(1);
  if (spec.start == DirectiveSpec::Start::D) {
    std::swap(r0, r1);
    std::swap(s0, s1);
    std::swap(b0, b1);
  }
  rec.parikh_r = {r0, r1};
  rec.parikh_s = {s0, s1};
  rec.parikh_b = {b0, b1};
  rec.len_r = t.qp(N);
  rec.len_s = m * t.qp(N) + t.qp(N - 1);
  rec.len_b = (m + BigInt(1)) * t.qp(N) + t.qp(N - 1) - BigInt(2);
  rec.stable_r = rec.parikh_r.ones.is_even();
  rec.stable_s = rec.parikh_s.ones.is_even();
  return rec;
}

BispecialWords bispecial_word(const DirectiveSpec& spec, uint64_t n) {
  decompose(spec, n);  // validates truncation depth
  BispecialWords w;
  Morphism derived_first = spec.run_letter(0);
  // run containing morphism position n (positions 0..a_1-1 sit in run 1, ...)
  {
    uint64_t total = 0, run = 1;
    for (;; ++run) {
      uint64_t h = spec.exponent(run);
      if (n < total + h) break;
      total += h;
    }
    derived_first = spec.run_letter(run);
  }
  // base case at the derived level: b = eps, r = more frequent letter
  int r_letter = derived_first == Morphism::G ? 1 : 0;
  w.b = BinaryWord();
  w.r = BinaryWord::single(r_letter);
  w.s = BinaryWord::single(1 - r_letter);

  if (n == 0) return w;
  // peel morphisms from position n-1 down to 0
  uint64_t total = 0, run = 1, h = spec.exponent(1);
  std::vector<std::pair<Morphism, uint64_t>> runs;  // run letter, count used
  while (total + h <= n) {
    runs.emplace_back(spec.run_letter(run), h);
    total += h;
    ++run;
    h = spec.exponent(run);
  }
  if (total < n) runs.emplace_back(spec.run_letter(run), n - total);

  for (size_t i = runs.size(); i-- > 0;) {
    auto [letter, count] = runs[i];
    for (uint64_t c = 0; c < count; ++c) {
      w.b = apply_morphism(letter, w.b);
      w.b.push_back(letter == Morphism::G ? 1 : 0);
      w.r = apply_morphism(letter, w.r);
      w.s = apply_morphism(letter, w.s);
    }
  }
  return w;
}

uint64_t return_block_exponent(const DirectiveSpec& spec, uint64_t n) {
  Decomposition dec = decompose(spec, n);
  return spec.exponent(dec.level + 1) - dec.offset;
}

Rational index_r(const DirectiveSpec& spec, uint64_t n) {
  Decomposition dec = decompose(spec, n);
  int64_t N = static_cast<int64_t>(dec.level);
  ConvergentTable t(spec, N);
  BigInt a(spec.exponent(dec.level + 1));
  return Rational((a + BigInt(2)) * t.qp(N) + t.qp(N - 1) - BigInt(2), t.qp(N));
}

Rational index_s(const DirectiveSpec& spec, uint64_t n) {
  Decomposition dec = decompose(spec, n);
  int64_t N = static_cast<int64_t>(dec.level);
  ConvergentTable t(spec, N);
  if (dec.offset == 0) {
    BigInt a(t.a(N));
    return Rational((a + BigInt(2)) * t.qp(N - 1) + t.qp(N - 2) - BigInt(2), t.qp(N - 1));
  }
  BigInt m(dec.offset);
  BigInt den = m * t.qp(N) + t.qp(N - 1);
  return Rational(BigInt(2) * den + t.qp(N) - BigInt(2), den);
}

ShortestBispecialSet shortest_bispecials(const DirectiveSpec& spec, uint64_t n) {
  if (n == 0) throw std::domain_error("shortest_bispecials: n must be >= 1");
  BigInt nb(n);
  // locate N with q'_N <= n < q'_{N+1}
  ConvergentTable t(spec, 4);
  int64_t N = 0;
  while (true) {
    if (N + 1 > t.max_index()) t.extend(N + 4);
    if (t.qp(N) <= nb && nb < t.qp(N + 1)) break;
    ++N;
  }
  uint64_t a_next = spec.exponent(static_cast<uint64_t>(N) + 1);
  uint64_t big_m = 0;
  for (int64_t i = 1; i <= N; ++i) big_m += spec.exponent(static_cast<uint64_t>(i));

  ShortestBispecialSet out;
  out.n = n;
  out.level = static_cast<uint64_t>(N);
  // smallest m with n <= (m+1) q'_N + q'_{N-1} - 2
  BigInt need = nb + BigInt(2) - t.qp(N - 1);
  BigInt mm = (need + t.qp(N) - BigInt(1)) / t.qp(N) - BigInt(1);
  if (mm.is_negative()) mm = BigInt(0);
  out.m = static_cast<uint64_t>(mm.to_int64());
  if (out.m > a_next) throw std::logic_error("shortest_bispecials: offset out of range");

  BigInt tgap = nb + BigInt(1) - t.qp(N - 1);
  out.prev_is_bispecial_length = (tgap % t.qp(N)).is_zero();

  if (out.prev_is_bispecial_length) {
    out.members = {big_m + out.m, big_m + a_next + 1};
  } else {
    out.members = {big_m + out.m, big_m + out.m + 1, big_m + a_next + 1};
  }
  return out;
}

BigInt sturmian_recurrence(const DirectiveSpec& spec, uint64_t n) {
  if (n == 0) throw std::domain_error("sturmian_recurrence: n must be >= 1");
  BigInt nb(n);
  ConvergentTable t(spec, 4);
  int64_t N = 0;
  while (true) {
    if (N + 1 > t.max_index()) t.extend(N + 4);
    if (t.qp(N) <= nb && nb < t.qp(N + 1)) break;
    ++N;
  }
  return t.qp(N + 1) + t.qp(N) + nb - BigInt(1);
}

ExponentValue sturmian_critical_exponent(const DirectiveSpec& spec) {
  EmitFn emit = [spec](const ConvergentTable& t, int64_t n) {
    std::vector<LevelTerm> out;
    BigInt a(t.a(n + 1));
    out.push_back({TermTag::IndR, a + BigInt(2), 1, -2, 1, 0});
    if (t.a(n + 1) > 1) out.push_back({TermTag::IndS, BigInt(3), 2, -2, 1, 1});
    return out;
  };
  return certified_supremum(spec, emit);
}

}  // namespace rw
