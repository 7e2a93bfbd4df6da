#include "bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rw {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v < 0) {
    neg_ = true;
    // avoid UB on LLONG_MIN
    unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
    while (m) {
      mag_.push_back(static_cast<uint32_t>(m));
      m >>= 32;
    }
  } else {
    unsigned long long m = static_cast<unsigned long long>(v);
    while (m) {
      mag_.push_back(static_cast<uint32_t>(m));
      m >>= 32;
    }
  }
}

BigInt::BigInt(unsigned long long v) {
  while (v) {
    mag_.push_back(static_cast<uint32_t>(v));
    v >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<uint32_t>(s);
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + ai * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    q = a;
    uint32_t rem = divmod_small(q, b[0]);
    r.clear();
    if (rem) r.push_back(rem);
    return;
  }

  const size_t n = b.size();
  const size_t m = a.size() - n;
  int shift = 0;
  while (((b[n - 1] << shift) & 0x80000000u) == 0) ++shift;

  // normalized copies
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = static_cast<uint64_t>(a[i]) << shift;
    u[i] |= static_cast<uint32_t>(cur);
    u[i + 1] |= static_cast<uint32_t>(cur >> 32);
  }
  for (size_t i = n; i-- > 0;) {
    uint64_t cur = static_cast<uint64_t>(b[i]) << shift;
    v[i] |= static_cast<uint32_t>(cur);
    if (i + 1 < n) v[i + 1] |= static_cast<uint32_t>(cur >> 32);
  }

  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply-subtract
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large
      t += kBase;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }

  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = (u[i] >> shift);
    if (shift && i + 1 < u.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  while (!r.empty() && r.back() == 0) r.pop_back();
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& a, uint32_t d) {
  if (d == 0) throw std::domain_error("BigInt: division by zero");
  uint64_t rem = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return static_cast<uint32_t>(rem);
}

void BigInt::mul_add_small(std::vector<uint32_t>& a, uint32_t mul, uint32_t add) {
  uint64_t carry = add;
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t cur = static_cast<uint64_t>(a[i]) * mul + carry;
    a[i] = static_cast<uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    a.push_back(static_cast<uint32_t>(carry));
    carry >>= 32;
  }
}

BigInt BigInt::from_decimal(std::string_view s) {
  BigInt out;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty decimal string");
  for (; i < s.size();) {
    // chunks of up to 9 digits
    uint32_t chunk = 0, pow = 1;
    size_t take = std::min<size_t>(9, s.size() - i);
    for (size_t k = 0; k < take; ++k, ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
      pow *= 10;
    }
    mul_add_small(out.mag_, pow, chunk);
  }
  out.neg_ = neg && !out.mag_.empty();
  return out;
}

std::string BigInt::to_decimal() const {
  if (mag_.empty()) return "0";
  std::vector<uint32_t> tmp = mag_;
  std::string digits;
  while (!tmp.empty()) {
    uint32_t rem = divmod_small(tmp, 1000000000u);
    if (tmp.empty()) {
      // most significant chunk: no zero padding
      std::string head = std::to_string(rem);
      std::reverse(head.begin(), head.end());
      digits += head;
    } else {
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
  }
  if (neg_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.mag_.empty()) r.neg_ = !r.neg_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    add_mag(mag_, o.mag_);
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
      mag_.clear();
      neg_ = false;
    } else if (c > 0) {
      sub_mag(mag_, o.mag_);
    } else {
      std::vector<uint32_t> t = o.mag_;
      sub_mag(t, mag_);
      mag_ = std::move(t);
      neg_ = o.neg_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  bool n = neg_ != o.neg_;
  mag_ = mul_mag(mag_, o.mag_);
  neg_ = n && !mag_.empty();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
  r.neg_ = a.neg_ && !r.mag_.empty();
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  *this = std::move(q);
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  *this = std::move(r);
  return *this;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (a.neg_) c = -c;
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

size_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  uint32_t top = mag_.back();
  size_t bits = (mag_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

BigInt BigInt::isqrt(const BigInt& a) {
  if (a.is_negative()) throw std::domain_error("BigInt: isqrt of negative");
  if (a.is_zero()) return BigInt();
  BigInt x = BigInt(1);
  size_t half = (a.bit_length() + 1) / 2;
  // x = 2^half >= sqrt(a)
  for (size_t i = 0; i < half; ++i) x += x;
  for (;;) {
    BigInt y = (x + a / x) / BigInt(2);
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > a) x -= BigInt(1);
  return x;
}

BigInt BigInt::pow(uint64_t e) const {
  BigInt base = *this, out = BigInt(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  uint64_t m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
  uint64_t m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  return neg_ ? -static_cast<int64_t>(m - 1) - 1 : static_cast<int64_t>(m);
}

double BigInt::to_double() const {
  double r = 0;
  for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
  return neg_ ? -r : r;
}

}  // namespace rw
