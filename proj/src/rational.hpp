#ifndef RW_RATIONAL_HPP
#define RW_RATIONAL_HPP

#include <compare>
#include <string>

#include "bigint.hpp"

namespace rw {

// Exact rational, canonical: den > 0, gcd(num, den) = 1, zero = 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d);  // throws std::domain_error on d == 0

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int signum() const { return num_.signum(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string to_string() const;  // "p/q", or "p" when integral
  static Rational parse(std::string_view s);
  double to_double() const { return num_.to_double() / den_.to_double(); }

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace rw

#endif
