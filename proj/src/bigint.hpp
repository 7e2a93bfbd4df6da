#ifndef RW_BIGINT_HPP
#define RW_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rw {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Canonical: no leading zero limbs, zero is non-negative with empty magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
  BigInt(long long v);
  BigInt(unsigned long long v);

  static BigInt from_decimal(std::string_view s);  // throws std::invalid_argument
  std::string to_decimal() const;

  bool is_zero() const { return mag_.empty(); }
  bool is_negative() const { return neg_; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
  int signum() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);  // truncates toward zero
  BigInt& operator%=(const BigInt& o);  // remainder has sign of dividend

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.mag_ == b.mag_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  // quotient/remainder in one division (same convention as / and %)
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  static BigInt gcd(BigInt a, BigInt b);   // non-negative
  static BigInt isqrt(const BigInt& a);    // floor(sqrt(a)), a >= 0
  BigInt pow(uint64_t e) const;

  bool fits_int64() const;
  int64_t to_int64() const;  // throws std::overflow_error when out of range
  double to_double() const;  // best-effort, for diagnostics only

  size_t bit_length() const;

 private:
  std::vector<uint32_t> mag_;
  bool neg_ = false;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  static uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d);  // in place, returns rem
  static void mul_add_small(std::vector<uint32_t>& a, uint32_t mul, uint32_t add);
};

}  // namespace rw

#endif
