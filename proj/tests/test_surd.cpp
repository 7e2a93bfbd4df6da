#include <doctest.h>

#include <stdexcept>

#include "surd.hpp"

using rw::BigInt;
using rw::Rational;
using rw::Surd;

namespace {
Surd S(long long a, long long b, long long c, long long d) {
  return Surd(BigInt(a), BigInt(b), BigInt(c), BigInt(d));
}
}  // namespace

TEST_CASE("canonicalization") {
  // perfect squares collapse to rationals
  CHECK(S(1, 1, 1, 9) == Surd(4));
  CHECK(S(0, 2, 4, 4) == Surd(1));
  // square factors fold into b
  Surd x = S(0, 1, 1, 32);
  CHECK(x.b() == BigInt(4));
  CHECK(x.d() == BigInt(2));
  // gcd reduction and sign of c
  Surd y = S(4, 2, -6, 5);
  CHECK(y.c() == BigInt(3));
  CHECK(y.a() == BigInt(-2));
  CHECK(y.b() == BigInt(-1));
  CHECK_THROWS_AS(S(1, 1, 0, 2), std::domain_error);
  CHECK_THROWS_AS(S(1, 1, 1, -2), std::domain_error);
}

TEST_CASE("rational embedding and comparisons") {
  CHECK(Surd(Rational(BigInt(7), BigInt(2))).to_string() == "7/2");
  CHECK(S(2, 1, 2, 2) < Surd(3));              // (2+sqrt2)/2 < 3
  CHECK(S(3, 1, 1, 2) == S(4, -1, 1, 2) + S(-1, 2, 1, 2));  // (4-s2)+(2s2-1) = 3+s2
  // 4 + 1/(1+sqrt2) = 3 + sqrt2
  Surd lhs = Surd(4) + Surd(1) / (Surd(1) + S(0, 1, 1, 2));
  CHECK(lhs == S(3, 1, 1, 2));
  CHECK(Surd(0) < S(0, 1, 1, 2));
  CHECK(S(0, -1, 1, 2) < Surd(0));
}

TEST_CASE("arithmetic identities") {
  Surd x = S(2, 3, 5, 7);
  CHECK(x + Surd(0) == x);
  CHECK(x - x == Surd(0));
  CHECK(x * Surd(1) == x);
  CHECK(x / x == Surd(1));
  Surd y = S(-1, 2, 3, 7);
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK(x * y == y * x);
  CHECK_THROWS_AS(x / Surd(0), std::domain_error);
  // mixed radicands are rejected
  CHECK_THROWS_AS(S(0, 1, 1, 2) + S(0, 1, 1, 3), std::domain_error);
  // ... unless one side is rational
  CHECK(S(0, 1, 1, 2) + Surd(2) == S(2, 1, 1, 2));
}

TEST_CASE("decimal rendering") {
  // 2 + 1/sqrt(2) = (4 + sqrt2)/2 = 2.70710678118...
  CHECK(S(4, 1, 2, 2).to_decimal(10) == "2.7071067811");
  CHECK(Surd(3).to_decimal(4) == "3.0000");
  CHECK(Surd(Rational(BigInt(-7), BigInt(2))).to_decimal(3) == "-3.500");
  CHECK(S(0, 1, 1, 5).to_decimal(6) == "2.236067");
  // 3 + 2/(1+sqrt5) = (5+sqrt5)/2 = 3.6180339887...
  CHECK(S(5, 1, 2, 5).to_decimal(10) == "3.6180339887");
}

TEST_CASE("pretty printing") {
  CHECK(S(4, 1, 2, 2).to_string() == "(4 + √2)/2");
  CHECK(S(3, 1, 1, 2).to_string() == "3 + √2");
  CHECK(S(0, 1, 1, 5).to_string() == "√5");
  CHECK(S(0, -2, 3, 5).to_string() == "-2√5/3");
  CHECK(Surd(3).to_string() == "3");
}

TEST_CASE("parse render round trip") {
  Surd vals[] = {S(4, 1, 2, 2), Surd(0), Surd(Rational(BigInt(-3), BigInt(7))),
                 S(5, -2, 3, 13)};
  for (const Surd& v : vals) {
    std::string compact = v.a().to_decimal() + "," + v.b().to_decimal() + "," +
                          v.c().to_decimal() + "," + v.d().to_decimal();
    CHECK(Surd::parse(compact) == v);
  }
}

TEST_CASE("signum with opposite-sign components") {
  CHECK(S(-1, 1, 1, 2).signum() == 1);   // sqrt2 > 1
  CHECK(S(-3, 2, 1, 2).signum() == -1);  // 2 sqrt2 < 3
  CHECK(S(3, -2, 1, 2).signum() == 1);
  CHECK(S(-2, 1, 1, 5).signum() == 1);   // sqrt5 > 2
  CHECK(Surd(0).signum() == 0);
}
