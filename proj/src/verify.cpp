#include "verify.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "exponent.hpp"
#include "oracle.hpp"
#include "recurrence.hpp"
#include "rote.hpp"
#include "sturmian.hpp"

namespace rw {
namespace checks {

namespace {

BinaryWord rote_prefix(const DirectiveSpec& spec, size_t len) {
  return rote_from_sturmian(generate_prefix(spec, len - 1), 0);
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name) { return {std::move(name), true, {}}; }

bool parikh_matches(const BigParikh& expect, const ParikhVector& got) {
  return expect.zeros == BigInt(got.zeros) && expect.ones == BigInt(got.ones);
}

}  // namespace

CheckResult complexity_profile(const DirectiveSpec& spec, size_t prefix_len, size_t n_max) {
  const std::string name = "complexity";
  oracle::PrefixIndex su(generate_prefix(spec, prefix_len));
  oracle::PrefixIndex ro(rote_prefix(spec, prefix_len));
  for (size_t n = 1; n <= n_max; ++n) {
    if (su.complexity(n) != n + 1)
      return fail(name, "Sturmian complexity at n=" + std::to_string(n));
    if (ro.complexity(n) != 2 * n)
      return fail(name, "Rote complexity at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult parikh_vs_brute(const DirectiveSpec& spec, uint64_t n_max, size_t max_word_len) {
  const std::string name = "parikh";
  for (uint64_t n = 0; n <= n_max; ++n) {
    BispecialRecord rec = bispecial(spec, n);
    if (rec.len_b > BigInt(max_word_len)) break;  // materialization cap
    BispecialWords w = bispecial_word(spec, n);
    if (BigInt(w.b.size()) != rec.len_b || BigInt(w.r.size()) != rec.len_r ||
        BigInt(w.s.size()) != rec.len_s)
      return fail(name, "length mismatch at n=" + std::to_string(n));
    if (!parikh_matches(rec.parikh_b, parikh(w.b)) ||
        !parikh_matches(rec.parikh_r, parikh(w.r)) ||
        !parikh_matches(rec.parikh_s, parikh(w.s)))
      return fail(name, "vector mismatch at n=" + std::to_string(n));
    if (rec.stable_r != is_stable(w.r) || rec.stable_s != is_stable(w.s))
      return fail(name, "stability mismatch at n=" + std::to_string(n));
    if (!is_palindrome(w.b)) return fail(name, "b not a palindrome at n=" + std::to_string(n));
    if (!w.b.empty() && !(w.b == generate_prefix(spec, w.b.size())))
      return fail(name, "b not a prefix at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult indices_vs_oracle(const DirectiveSpec& spec, uint64_t n_max, size_t prefix_len) {
  const std::string name = "indices";
  oracle::PrefixIndex idx(generate_prefix(spec, prefix_len));
  for (uint64_t n = 0; n <= n_max; ++n) {
    BispecialWords w = bispecial_word(spec, n);
    oracle::FactorIndexReport rr = oracle::scan_index(idx, w.r);
    oracle::FactorIndexReport rs = oracle::scan_index(idx, w.s);
    if (!rr.truncation_safe || !rs.truncation_safe)
      return fail(name, "prefix too short to certify n=" + std::to_string(n));
    if (!(rr.index == index_r(spec, n)))
      return fail(name, "ind(r) mismatch at n=" + std::to_string(n));
    if (!(rs.index == index_s(spec, n)))
      return fail(name, "ind(s) mismatch at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult shortest_bs_vs_oracle(const DirectiveSpec& spec, uint64_t n_max,
                                  size_t prefix_len) {
  const std::string name = "shortest-bispecials";
  BinaryWord prefix = generate_prefix(spec, prefix_len);
  oracle::PrefixIndex idx(prefix);
  // longest bispecial any queried set can reach
  ShortestBispecialSet top = shortest_bispecials(spec, n_max);
  BigInt cap_len = bispecial(spec, top.members.back()).len_b + BigInt(2);
  size_t cap = static_cast<size_t>(cap_len.to_int64());
  std::vector<BinaryWord> bisp = oracle::scan_bispecials(idx, cap);

  for (uint64_t n = 1; n <= n_max; ++n) {
    ShortestBispecialSet set = shortest_bispecials(spec, n);
    if (set.members.size() != 2 && set.members.size() != 3)
      return fail(name, "set size at n=" + std::to_string(n));
    std::set<BinaryWord> expect;
    for (uint64_t member : set.members) {
      BigInt len = bispecial(spec, member).len_b;
      expect.insert(prefix.substr(0, static_cast<size_t>(len.to_int64())));
    }
    std::set<BinaryWord> got;
    for (const auto& g : idx.factors(static_cast<size_t>(n)))
      got.insert(oracle::shortest_bispecial_containing(
          idx, bisp, idx.slice(g.occurrences.front(), static_cast<size_t>(n))));
    if (expect != got) return fail(name, "set mismatch at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult rote_returns_vs_oracle(const DirectiveSpec& spec, uint64_t n_max,
                                   size_t prefix_len) {
  const std::string name = "rote-return-triples";
  BinaryWord v = rote_prefix(spec, prefix_len);
  oracle::PrefixIndex idx(v);
  for (uint64_t n = 0; n <= n_max; ++n) {
    RoteReturnTriple triple = rote_return_triple(spec, n);
    BigInt len_b = bispecial(spec, n).len_b;
    BinaryWord v_bs = v.substr(0, static_cast<size_t>(len_b.to_int64()) + 1);
    std::vector<BinaryWord> got = oracle::scan_return_words(idx, v_bs);
    std::set<BinaryWord> expect{triple.A, triple.B, triple.C};
    if (std::set<BinaryWord>(got.begin(), got.end()) != expect)
      return fail(name, "triple mismatch at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult recurrences_vs_oracle(const DirectiveSpec& spec, uint64_t n_max,
                                  size_t prefix_len) {
  const std::string name = "recurrence";
  oracle::PrefixIndex su(generate_prefix(spec, prefix_len));
  oracle::PrefixIndex ro(rote_prefix(spec, prefix_len));
  for (uint64_t n = 1; n <= n_max; ++n) {
    oracle::RecurrenceReport sr = oracle::scan_recurrence(su, static_cast<size_t>(n));
    if (!sr.certified) return fail(name, "Sturmian scan uncertified at n=" + std::to_string(n));
    if (BigInt(sr.value) != sturmian_recurrence(spec, n))
      return fail(name, "Sturmian mismatch at n=" + std::to_string(n));
    oracle::RecurrenceReport rr = oracle::scan_recurrence(ro, static_cast<size_t>(n) + 1);
    if (!rr.certified) return fail(name, "Rote scan uncertified at n=" + std::to_string(n));
    if (BigInt(rr.value) != rote_recurrence(spec, n))
      return fail(name, "Rote mismatch at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult unique_palindromic_extension(const DirectiveSpec& spec, size_t n_max,
                                         size_t prefix_len) {
  const std::string name = "palindromic-extension";
  oracle::PrefixIndex idx(generate_prefix(spec, prefix_len));
  for (size_t n = 0; n <= n_max; ++n) {
    for (const auto& rep : oracle::palindrome_extension_counts(idx, n)) {
      if (rep.first_pos + n + std::max<size_t>(4 * n, 64) > prefix_len) continue;
      if (rep.extension_count != 1)
        return fail(name, "extension count " + std::to_string(rep.extension_count) + " at n=" +
                              std::to_string(n));
    }
  }
  return pass(name);
}

CheckResult exchange_closure(const DirectiveSpec& spec, size_t n_max, size_t prefix_len) {
  const std::string name = "exchange-closure";
  BinaryWord v = rote_prefix(spec, prefix_len);
  oracle::PrefixIndex idx(v);
  oracle::PrefixIndex flipped(exchange(v));
  for (size_t n = 1; n <= n_max; ++n) {
    if (!oracle::factors_closed_under_exchange(idx, flipped, n, 4 * n))
      return fail(name, "not closed at n=" + std::to_string(n));
  }
  return pass(name);
}

CheckResult transfer_relation(const DirectiveSpec& spec, size_t max_len, size_t prefix_len) {
  const std::string name = "index-transfer";
  oracle::PrefixIndex iu(generate_prefix(spec, prefix_len));
  oracle::PrefixIndex iv(rote_prefix(spec, prefix_len));
  for (size_t len = 1; len <= max_len; ++len) {
    for (const auto& g : iu.factors(len)) {
      BinaryWord u = iu.slice(g.occurrences.front(), len);
      if (!is_stable(u)) continue;
      BinaryWord w = s_inverse(u);
      w.truncate(w.size() - 1);  // stable preimage ends in 0
      bool early = g.occurrences.front() + 6 * len <= prefix_len;
      if (!iv.contains(w)) {
        if (early) return fail(name, "preimage missing at len=" + std::to_string(len));
        continue;
      }
      oracle::FactorIndexReport ru = oracle::scan_index(iu, u);
      oracle::FactorIndexReport rv = oracle::scan_index(iv, w);
      if (!ru.truncation_safe || !rv.truncation_safe) {
        if (early) return fail(name, "uncertified index at len=" + std::to_string(len));
        continue;
      }
      if (!(rv.index == ru.index + Rational(BigInt(1), BigInt(len))))
        return fail(name, "transfer mismatch at len=" + std::to_string(len));
    }
  }
  return pass(name);
}

CheckResult exponent_scan_agreement(const DirectiveSpec& spec, size_t max_root_len,
                                    size_t prefix_len, const Rational& tolerance) {
  const std::string name = "exponent-scan";
  ExponentValue exact = critical_exponent(spec);
  oracle::PrefixIndex iv(rote_prefix(spec, prefix_len));
  Rational bound = oracle::scan_critical_exponent(iv, max_root_len);
  if (Surd(bound) > exact.value) return fail(name, "scan exceeded the exact value");
  if (Surd(bound) + Surd(tolerance) < exact.value)
    return fail(name, "scan lower bound not within tolerance");
  return pass(name);
}

}  // namespace checks

std::vector<CheckResult> verify_spec(const DirectiveSpec& spec, uint32_t depth) {
  if (depth == 0) depth = 1;
  size_t prefix = std::clamp<size_t>(static_cast<size_t>(depth) * 600, 6000, 60000);
  uint64_t nd = depth;
  std::vector<CheckResult> out;
  out.push_back(checks::complexity_profile(spec, prefix, std::min<size_t>(10 * depth, 300)));
  out.push_back(checks::parikh_vs_brute(spec, nd, 1u << 21));
  out.push_back(checks::indices_vs_oracle(spec, std::min<uint64_t>(nd, 14), prefix));
  out.push_back(checks::shortest_bs_vs_oracle(spec, std::min<size_t>(8 * depth, 150), prefix));
  out.push_back(checks::rote_returns_vs_oracle(spec, std::min<uint64_t>(nd, 12), prefix));
  out.push_back(checks::recurrences_vs_oracle(spec, std::min<size_t>(8 * depth, 120), prefix));
  out.push_back(
      checks::unique_palindromic_extension(spec, std::min<size_t>(10 * depth, 200), prefix));
  out.push_back(checks::exchange_closure(spec, std::min<size_t>(10 * depth, 200), prefix));
  out.push_back(checks::transfer_relation(spec, std::min<size_t>(2 * depth, 30), prefix));
  if (spec.exact()) {
    out.push_back(checks::exponent_scan_agreement(
        spec, 400, prefix, Rational(BigInt(1), BigInt(20))));
  }
  return out;
}

}  // namespace rw
