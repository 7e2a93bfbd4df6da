#include "convergents.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace rw {

ConvergentTable::ConvergentTable(const DirectiveSpec& spec, int64_t n_max)
    : spec_(spec), n_max_(-1) {
  p_ = {BigInt(1)};   // p_{-1}
  q_ = {BigInt(0)};   // q_{-1}
  qp_ = {BigInt(1)};  // q'_{-1}
  extend(n_max);
}

void ConvergentTable::extend(int64_t new_n_max) {
  for (int64_t n = n_max_ + 1; n <= new_n_max; ++n) {
    if (n == 0) {
      p_.push_back(BigInt(0));
      q_.push_back(BigInt(1));
      qp_.push_back(BigInt(1));
      continue;
    }
    BigInt an(spec_.exponent(static_cast<uint64_t>(n)));
    p_.push_back(an * p_[n] + p_[n - 1]);
    q_.push_back(an * q_[n] + q_[n - 1]);
    qp_.push_back(an * qp_[n] + qp_[n - 1]);
  }
  if (new_n_max > n_max_) n_max_ = new_n_max;
}

const BigInt& ConvergentTable::at(const std::vector<BigInt>& v, int64_t n) {
  if (n < -1 || n + 1 >= static_cast<int64_t>(v.size()))
    throw std::out_of_range("ConvergentTable: row not materialized");
  return v[static_cast<size_t>(n + 1)];
}

const BigInt& ConvergentTable::qp(int64_t n) const {
  static const BigInt sentinel(1);  // q'_{-2} = 1
  if (n == -2) return sentinel;
  return at(qp_, n);
}

uint64_t ConvergentTable::a(int64_t n) const {
  if (n <= 0) return 0;
  return spec_.exponent(static_cast<uint64_t>(n));
}

std::string ConvergentTable::to_csv() const {
  std::string out = "N,a_N,p_N,q_N,qp_N\n";
  for (int64_t n = -1; n <= n_max_; ++n) {
    out += std::to_string(n);
    out.push_back(',');
    out += n >= 1 ? std::to_string(a(n)) : "0";
    out.push_back(',');
    out += p(n).to_decimal();
    out.push_back(',');
    out += q(n).to_decimal();
    out.push_back(',');
    out += qp(n).to_decimal();
    out.push_back('\n');
  }
  return out;
}

std::vector<int> parity_pattern(const DirectiveSpec& spec, ConvergentColumn column,
                                int64_t n_max) {
  if (n_max < 0) throw std::domain_error("parity_pattern: n_max must be >= 0");
  ConvergentTable table(spec, n_max);
  std::vector<int> bits;
  bits.reserve(static_cast<size_t>(n_max) + 1);
  for (int64_t n = 0; n <= n_max; ++n) {
    const BigInt& v = column == ConvergentColumn::Q ? table.q(n) : table.p(n);
    bits.push_back(v.is_even() ? 0 : 1);
  }
  return bits;
}

Surd ratio_limit(const DirectiveSpec& spec, uint64_t residue_class) {
  if (!spec.exact()) throw ModeError("ratio_limit: spec has no period");
  size_t p = spec.period.size();
  uint64_t j = residue_class % p;
  // r -> 1/(a + r) steps composed over one period starting after class j;
  // as a matrix [[alpha, beta], [gamma, delta]] acting by Moebius transform
  BigInt al(0), be(1), ga(1), de(spec.period[j % p]);
  for (size_t k = 1; k < p; ++k) {
    uint64_t step = spec.period[(j + k) % p];
    // left-compose [[0,1],[1,step]]
    BigInt nal = ga, nbe = de;
    BigInt nga = al + BigInt(step) * ga;
    BigInt nde = be + BigInt(step) * de;
    al = nal;
    be = nbe;
    ga = nga;
    de = nde;
  }
  // fixed point of x = (al x + be)/(ga x + de), root in (0,1):
  // ga x^2 + (de - al) x - be = 0
  BigInt disc = (de - al) * (de - al) + BigInt(4) * be * ga;
  Surd root = (Surd(Rational(al - de)) + Surd::sqrt_of(disc)) / Surd(Rational(BigInt(2) * ga));
  if (!(Surd(0) < root && root < Surd(1)))
    throw std::logic_error("ratio_limit: fixed point escaped (0,1)");
  return root;
}

}  // namespace rw
