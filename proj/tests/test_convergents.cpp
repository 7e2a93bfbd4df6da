#include <doctest.h>

#include "convergents.hpp"
#include "errors.hpp"

using namespace rw;

namespace {
DirectiveSpec spec_of(const char* s) { return DirectiveSpec::parse(s); }
}  // namespace

TEST_CASE("spec parsing and rendering") {
  DirectiveSpec fib = spec_of("G:1|1");
  CHECK(fib.start == DirectiveSpec::Start::G);
  CHECK(fib.preperiod == std::vector<uint64_t>{1});
  CHECK(fib.period == std::vector<uint64_t>{1});
  CHECK(fib.render() == "G:1|1");
  CHECK(spec_of("D:1|2,2").render() == "D:1|2,2");
  CHECK(spec_of("G:2").exact() == false);
  CHECK(spec_of("G:2|").exact() == false);
  CHECK(spec_of("G:|2,2").preperiod.empty());
  CHECK_THROWS_AS(spec_of("X:1|1"), ParseError);
  CHECK_THROWS_AS(spec_of("G:0|1"), ParseError);
  CHECK_THROWS_AS(spec_of("G:"), ParseError);
  CHECK_THROWS_AS(spec_of("G:1,|2"), ParseError);
  CHECK_THROWS_AS(spec_of("bad-spec"), ParseError);
}

TEST_CASE("canonical forms") {
  CHECK(spec_of("G:1|2,2").canonical().render() == "G:1|2");
  CHECK(spec_of("G:1,2|2").canonical().render() == "G:1|2");
  CHECK(spec_of("G:1,2,2,2|2").canonical().render() == "G:1|2");
  CHECK(spec_of("G:|1,1").canonical().render() == "G:|1");
  CHECK(spec_of("G:|2,1,2,1").canonical().render() == "G:|2,1");
  CHECK(spec_of("G:1,2|1,2,1,2").canonical().render() == "G:|1,2");
  CHECK(spec_of("D:3").canonical().render() == "D:3");
}

TEST_CASE("run letters alternate from the start letter") {
  DirectiveSpec g = spec_of("G:1|1");
  CHECK(g.run_letter(1) == Morphism::G);
  CHECK(g.run_letter(2) == Morphism::D);
  CHECK(g.run_letter(3) == Morphism::G);
  DirectiveSpec d = spec_of("D:1|1");
  CHECK(d.run_letter(1) == Morphism::D);
  CHECK(d.run_letter(2) == Morphism::G);
}

TEST_CASE("Fibonacci denominators") {
  ConvergentTable t(spec_of("G:1|1"), 8);
  // q = 1, 1, 2, 3, 5, 8, ... for N = 0, 1, 2, ...
  long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int n = 0; n <= 8; ++n) CHECK(t.q(n) == BigInt(expect[n]));
  CHECK(t.p(0) == BigInt(0));
  CHECK(t.q(0) == BigInt(1));
  CHECK(t.qp(0) == BigInt(1));
  CHECK(t.qp(-1) == BigInt(1));
  CHECK(t.qp(-2) == BigInt(1));
}

TEST_CASE("qp column for a = (1,2,2,2,...)") {
  ConvergentTable t(spec_of("G:1|2"), 5);
  long expect[] = {1, 2, 5, 12, 29, 70};
  for (int n = 0; n <= 5; ++n) CHECK(t.qp(n) == BigInt(expect[n]));
}

TEST_CASE("table invariants across sample specs") {
  for (const char* s : {"G:1|1", "G:1|2", "D:1|2,2", "G:3,1|1,2,3", "D:2|3,1"}) {
    DirectiveSpec spec = spec_of(s);
    ConvergentTable t(spec, 24);
    for (int n = -1; n <= 24; ++n) CHECK(t.p(n) + t.q(n) == t.qp(n));
    for (int n = 0; n <= 24; ++n) {
      CHECK(BigInt::gcd(t.p(n), t.q(n)) == BigInt(1));
      // no (0,0) parity and no repeated parity pair
      CHECK((!t.p(n).is_even() || !t.q(n).is_even()));
      CHECK((t.p(n).is_even() != t.p(n - 1).is_even() ||
             t.q(n).is_even() != t.q(n - 1).is_even()));
    }
    // determinant identity p_N q_{N-1} - p_{N-1} q_N = (-1)^{N+1}
    for (int n = 0; n <= 24; ++n) {
      BigInt det = t.p(n) * t.q(n - 1) - t.p(n - 1) * t.q(n);
      CHECK(det == (n % 2 == 0 ? BigInt(-1) : BigInt(1)));
    }
    // a_N (p,q)_{N-1} + ... + a_1 (p,q)_0 = (p,q)_N + (p,q)_{N-1} - (1,1)
    BigInt sp(0), sq(0);
    for (int n = 1; n <= 24; ++n) {
      sp += BigInt(t.a(n)) * t.p(n - 1);
      sq += BigInt(t.a(n)) * t.q(n - 1);
      CHECK(sp == t.p(n) + t.p(n - 1) - BigInt(1));
      CHECK(sq == t.q(n) + t.q(n - 1) - BigInt(1));
    }
    // monotone qp
    for (int n = 1; n <= 24; ++n) CHECK(t.qp(n) > t.qp(n - 1));
  }
}

TEST_CASE("parity patterns") {
  // q odd everywhere for a = (1,2,2,...)
  auto bits = parity_pattern(spec_of("G:1|2"), ConvergentColumn::Q, 20);
  for (int b : bits) CHECK(b == 1);
  auto pbits = parity_pattern(spec_of("G:1|2"), ConvergentColumn::P, 3);
  CHECK(pbits[0] == 0);  // p_0 = 0
  auto pb2 = parity_pattern(spec_of("G:1,1|2"), ConvergentColumn::P, 4);
  CHECK(pb2 == std::vector<int>{0, 1, 1, 1, 1});
}

TEST_CASE("ratio limits") {
  Surd sqrt2m1(BigInt(-1), BigInt(1), BigInt(1), BigInt(2));
  CHECK(ratio_limit(spec_of("G:|2,2"), 0) == sqrt2m1);
  CHECK(ratio_limit(spec_of("G:|2,2"), 1) == sqrt2m1);
  CHECK(ratio_limit(spec_of("G:1|2,2"), 0) == sqrt2m1);  // preperiod irrelevant
  Surd golden(BigInt(-1), BigInt(1), BigInt(2), BigInt(5));  // (sqrt5 - 1)/2
  CHECK(ratio_limit(spec_of("G:|1,1"), 0) == golden);
  CHECK(ratio_limit(spec_of("D:|1"), 0) == golden);
  CHECK_THROWS_AS(ratio_limit(spec_of("G:2"), 0), ModeError);
}

TEST_CASE("ratio limit is a fixed point of the period map") {
  for (const char* s : {"G:|2,2", "G:|1,2", "D:|3,1,2", "G:|1,1,1,2"}) {
    DirectiveSpec spec = spec_of(s);
    size_t p = spec.period.size();
    for (uint64_t j = 0; j < p; ++j) {
      Surd x = ratio_limit(spec, j);
      // push x through one full period of steps r -> 1/(a + r)
      Surd cur = x;
      for (size_t k = 0; k < p; ++k) {
        uint64_t a = spec.period[(j + k) % p];
        cur = Surd(1) / (Surd(Rational(BigInt(a))) + cur);
      }
      CHECK(cur == x);
      CHECK(Surd(0) < x);
      CHECK(x < Surd(1));
    }
  }
}

TEST_CASE("csv shape") {
  std::string csv = ConvergentTable(spec_of("G:1|1"), 2).to_csv();
  CHECK(csv == "N,a_N,p_N,q_N,qp_N\n-1,0,1,0,1\n0,0,0,1,1\n1,1,1,1,2\n2,1,1,2,3\n");
}

TEST_CASE("spec parser rejects junk without crashing") {
  struct Rng {
    uint64_t s = 7;
    uint64_t next() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    }
  } rng;
  const char alphabet[] = "GD:|,0123456789xX -";
  int parsed = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string text;
    size_t len = rng.next() % 12;
    for (size_t k = 0; k < len; ++k) text.push_back(alphabet[rng.next() % (sizeof(alphabet) - 1)]);
    try {
      DirectiveSpec spec = DirectiveSpec::parse(text);
      ++parsed;
      // whatever parses must round-trip
      CHECK(DirectiveSpec::parse(spec.render()) == spec);
    } catch (const ParseError&) {
    }
  }
  CHECK(parsed > 0);  // the generator does hit valid specs
}
