#include "recurrence.hpp"

#include <stdexcept>

#include "convergents.hpp"
#include "rote.hpp"

namespace rw {

namespace {

std::string case_name(const DirectiveSpec& spec, const ConvergentTable& t, int64_t N) {
  bool use_p = spec.start == DirectiveSpec::Start::D;
  const BigInt& first = use_p ? t.p(N) : t.q(N);
  const BigInt& second = use_p ? t.p(N + 1) : t.q(N + 1);
  std::string tag = first.is_even() ? "even_" : "odd_";
  tag += second.is_even() ? "even" : "odd";
  tag += spec.exponent(static_cast<uint64_t>(N) + 2) > 1 ? "_gt1" : "_eq1";
  return tag;
}

}  // namespace

BigInt rote_recurrence(const DirectiveSpec& spec, uint64_t n) {
  if (n == 0) throw std::domain_error("rote_recurrence: n must be >= 1");
  BigInt nb(n);
  ConvergentTable t(spec, 4);
  int64_t N = 0;
  while (true) {
    if (N + 1 > t.max_index()) t.extend(N + 4);
    if (t.qp(N) <= nb && nb < t.qp(N + 1)) break;
    ++N;
  }
  return longest_rote_return_length(spec, static_cast<uint64_t>(N)) + nb;
}

std::vector<RecurrencePiece> recurrence_table(const DirectiveSpec& spec, uint64_t n_max) {
  if (n_max == 0) throw std::domain_error("recurrence_table: n_max must be >= 1");
  BigInt bound(n_max);
  std::vector<RecurrencePiece> pieces;
  ConvergentTable t(spec, 4);
  for (int64_t N = 0;; ++N) {
    if (N + 2 > t.max_index()) t.extend(N + 4);
    if (t.qp(N) > bound) break;
    RecurrencePiece piece;
    piece.level = static_cast<uint64_t>(N);
    piece.lo = t.qp(N);
    piece.hi = t.qp(N + 1);
    piece.case_tag = case_name(spec, t, N);
    piece.L = longest_rote_return_length(spec, piece.level);
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::string recurrence_table_csv(const std::vector<RecurrencePiece>& pieces) {
  std::string out = "N,interval_lo,interval_hi,case_tag,L\n";
  for (const RecurrencePiece& p : pieces) {
    out += std::to_string(p.level);
    out.push_back(',');
    out += p.lo.to_decimal();
    out.push_back(',');
    out += p.hi.to_decimal();
    out.push_back(',');
    out += p.case_tag;
    out.push_back(',');
    out += p.L.to_decimal();
    out.push_back('\n');
  }
  return out;
}

}  // namespace rw
