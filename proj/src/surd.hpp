#ifndef RW_SURD_HPP
#define RW_SURD_HPP

#include <compare>
#include <string>

#include "rational.hpp"

namespace rw {

// Exact value (a + b*sqrt(d)) / c with integer a, b, c and radicand d >= 0.
// Canonical form: c > 0, gcd(a, b, c) = 1, b == 0 implies d == 0, and d carries
// no square factor with prime divisor below 10^4 (small ones are folded into b;
// a perfect-square d collapses the value to a rational).
//
// Arithmetic mixes two surds only when they are rational or share the same d.
class Surd {
 public:
  Surd() : a_(0), b_(0), c_(1), d_(0) {}
  Surd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {}
  Surd(long long v) : a_(v), b_(0), c_(1), d_(0) {}
  Surd(BigInt a, BigInt b, BigInt c, BigInt d);  // throws std::domain_error

  static Surd sqrt_of(const BigInt& d) { return Surd(BigInt(0), BigInt(1), BigInt(1), d); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  Rational as_rational() const;  // throws std::domain_error when irrational
  int signum() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  // floor(value * 10^digits) based decimal string, sign-aware, deterministic
  std::string to_decimal(int digits = 10) const;
  double to_double() const;
  std::string to_string() const;  // "(4 + √2)/2", "3", "-7/2", ...
  std::string to_json() const;    // {"a":"...","b":"...","c":"...","d":"..."}
  static Surd parse(std::string_view json_or_compact);

 private:
  BigInt a_, b_, c_, d_;
  void normalize();
  static void check_same_field(const Surd& x, const Surd& y);
};

}  // namespace rw

#endif
