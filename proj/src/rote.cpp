#include "rote.hpp"

#include <stdexcept>

namespace rw {

BinaryWord rote_from_sturmian(const BinaryWord& u_prefix, int v0) {
  BinaryWord v;
  int cur = v0 ? 1 : 0;
  v.push_back(cur);
  for (size_t i = 0; i < u_prefix.size(); ++i) {
    cur ^= u_prefix[i];
    v.push_back(cur);
  }
  return v;
}

TransferElement transfer_index(const Rational& u_index, uint64_t u_len, bool stable) {
  if (u_len == 0) throw std::domain_error("transfer_index: zero length");
  Rational lifted = u_index + Rational(BigInt(1), BigInt(u_len));
  if (stable) return {lifted, true};
  return {lifted / Rational(2), false};
}

namespace {

// drops the forced trailing 0 of the stable preimage
BinaryWord preimage_word(const BinaryWord& stable_image) {
  BinaryWord w = s_inverse(stable_image);
  if (w[w.size() - 1] != 0)
    throw std::logic_error("rote_return_triple: preimage of unstable word requested");
  w.truncate(w.size() - 1);
  return w;
}

BinaryWord concat(std::initializer_list<const BinaryWord*> parts) {
  BinaryWord out;
  for (const BinaryWord* p : parts) out.append(*p);
  return out;
}

}  // namespace

RoteReturnTriple rote_return_triple(const DirectiveSpec& spec, uint64_t n) {
  BispecialRecord rec = bispecial(spec, n);
  BispecialWords words = bispecial_word(spec, n);
  uint64_t l = return_block_exponent(spec, n);

  RoteReturnTriple out;
  if (rec.stable_r && rec.stable_s)
    throw std::logic_error("rote_return_triple: r and s cannot both be stable");

  const BinaryWord& r = words.r;
  const BinaryWord& s = words.s;
  if (rec.stable_r) {
    out.case_tag = ReturnCase::RStable;
    BinaryWord rl;  // r^l
    for (uint64_t i = 0; i < l; ++i) rl.append(r);
    BinaryWord srls = concat({&s, &rl, &s});
    BinaryWord srl1s = concat({&s, &rl, &r, &s});
    out.A = preimage_word(r);
    out.B = preimage_word(srls);
    out.C = preimage_word(srl1s);
  } else if (rec.stable_s) {
    out.case_tag = ReturnCase::SStable;
    BinaryWord rr = concat({&r, &r});
    BinaryWord rsr = concat({&r, &s, &r});
    out.A = preimage_word(s);
    out.B = preimage_word(rr);
    out.C = preimage_word(rsr);
  } else {
    out.case_tag = ReturnCase::BothUnstable;
    BinaryWord rr = concat({&r, &r});
    BinaryWord rs = concat({&r, &s});
    BinaryWord sr = concat({&s, &r});
    out.A = preimage_word(rr);
    out.B = preimage_word(rs);
    out.C = preimage_word(sr);
  }
  return out;
}

BigInt longest_rote_return_length(const DirectiveSpec& spec, uint64_t level) {
  int64_t N = static_cast<int64_t>(level);
  ConvergentTable t(spec, N + 2);
  bool use_p = spec.start == DirectiveSpec::Start::D;
  const BigInt& first = use_p ? t.p(N) : t.q(N);
  const BigInt& second = use_p ? t.p(N + 1) : t.q(N + 1);
  uint64_t a_n2 = spec.exponent(level + 2);

  if (first.is_even() && second.is_even())
    throw std::logic_error("longest_rote_return_length: impossible parity pair");

  if (first.is_even()) {
    return a_n2 > 1 ? BigInt(2) * t.qp(N + 1) + t.qp(N) : BigInt(2) * t.qp(N + 2);
  }
  if (second.is_even()) {
    return a_n2 > 1 ? t.qp(N + 2) + BigInt(2) * t.qp(N + 1) + t.qp(N)
                    : BigInt(2) * t.qp(N + 2) + t.qp(N + 1);
  }
  if (a_n2 > 1) return BigInt(3) * t.qp(N + 1) + t.qp(N);
  t.extend(N + 3);
  return t.qp(N + 3) + t.qp(N + 2) + t.qp(N + 1);
}

}  // namespace rw
