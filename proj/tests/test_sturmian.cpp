#include <doctest.h>

#include <stdexcept>

#include "errors.hpp"
#include "oracle.hpp"
#include "sturmian.hpp"
#include "verify.hpp"

using namespace rw;

namespace {
DirectiveSpec spec_of(const char* s) { return DirectiveSpec::parse(s); }
BinaryWord W(const char* s) { return BinaryWord::from_string(s); }
}  // namespace

TEST_CASE("prefix generation basics") {
  // G-start sequences are built from blocks 1^{a1} 0
  CHECK(generate_prefix(spec_of("G:2"), 3) == W("110"));
  CHECK(generate_prefix(spec_of("G:2|2"), 9) == W("110110111"));
  // D-start sequences from blocks 0^{a1} 1
  CHECK(generate_prefix(spec_of("D:2"), 3) == W("001"));
  // Fibonacci directive: letter-exchange of the a->ab fixed point
  CHECK(generate_prefix(spec_of("G:1|1"), 13) == W("1011010110110"));
  CHECK(generate_prefix(spec_of("D:1|1"), 13) == W("0100101001001"));
  CHECK_THROWS_AS(generate_prefix(spec_of("G:2"), 4), InsufficientDirectiveError);
  CHECK_THROWS_AS(generate_prefix(spec_of("G:1|1"), 0), std::domain_error);
  // deeper truncations stabilize longer prefixes
  CHECK(generate_prefix(spec_of("G:1,1,1,1,1,1,1,1"), 20) ==
        generate_prefix(spec_of("G:1|1"), 20));
}

TEST_CASE("decomposition n = m + a_0 + ... + a_N") {
  DirectiveSpec fib = spec_of("G:1|1");
  for (uint64_t n = 0; n <= 10; ++n) {
    Decomposition d = decompose(fib, n);
    CHECK(d.level == n);
    CHECK(d.offset == 0);
  }
  DirectiveSpec s = spec_of("G:2|3,1");
  // a = 2,3,1,3,1,...; n = 0,1 -> (0, m); n=2..4 -> (1, m); n=5 -> (2,0); ...
  CHECK(decompose(s, 0).level == 0);
  CHECK(decompose(s, 1).offset == 1);
  CHECK(decompose(s, 2).level == 1);
  CHECK(decompose(s, 4).offset == 2);
  CHECK(decompose(s, 5).level == 2);
  CHECK(decompose(s, 6).level == 3);
}

TEST_CASE("bispecial records at n = 0") {
  for (const char* txt : {"G:1|1", "G:2|1,2", "D:1|2,2"}) {
    BispecialRecord rec = bispecial(spec_of(txt), 0);
    CHECK(rec.len_b == BigInt(0));
    CHECK(rec.parikh_b == BigParikh{BigInt(0), BigInt(0)});
    CHECK(rec.len_r == BigInt(1));
    CHECK(rec.len_s == BigInt(1));
  }
  // G-start: r is the letter 1
  BispecialRecord rec = bispecial(spec_of("G:2|1"), 0);
  CHECK(rec.parikh_r == BigParikh{BigInt(0), BigInt(1)});
  CHECK(rec.parikh_s == BigParikh{BigInt(1), BigInt(0)});
  // D-start: coordinates swapped
  BispecialRecord drec = bispecial(spec_of("D:2|1"), 0);
  CHECK(drec.parikh_r == BigParikh{BigInt(1), BigInt(0)});
}

TEST_CASE("Fibonacci bispecial lengths are the palindromic prefix lengths") {
  DirectiveSpec fib = spec_of("G:1|1");
  long expect[] = {0, 1, 3, 6, 11, 19, 32};
  for (uint64_t n = 0; n <= 6; ++n) CHECK(bispecial(fib, n).len_b == BigInt(expect[n]));
  // and the s-word at m=0 has V(s) = (p_{N-1}, q_{N-1})
  BispecialRecord rec = bispecial(fib, 3);
  ConvergentTable t(fib, 3);
  CHECK(rec.parikh_s.zeros == t.p(2));
  CHECK(rec.parikh_s.ones == t.q(2));
}

TEST_CASE("bispecial words match their records") {
  for (const char* txt : {"G:1|1", "G:1|2", "G:2|1,2", "D:1|2,2", "D:3|1"}) {
    DirectiveSpec spec = spec_of(txt);
    CheckResult r = checks::parikh_vs_brute(spec, 12, 1u << 20);
    CHECK_MESSAGE(r.pass, txt, ": ", r.detail);
  }
}

TEST_CASE("bispecial word small cases") {
  BispecialWords w0 = bispecial_word(spec_of("G:1|1"), 0);
  CHECK(w0.b == W(""));
  CHECK(w0.r == W("1"));
  CHECK(w0.s == W("0"));
  BispecialWords w1 = bispecial_word(spec_of("G:1|1"), 1);
  CHECK(w1.b == W("1"));  // first letter of u
}

TEST_CASE("return block exponents") {
  CHECK(return_block_exponent(spec_of("G:3|2"), 0) == 3);  // l = a_1 at n = 0
  CHECK(return_block_exponent(spec_of("G:3|2"), 2) == 1);  // m = a_1 - 1
  for (uint64_t n = 0; n < 8; ++n) CHECK(return_block_exponent(spec_of("G:1|1"), n) == 1);
}

TEST_CASE("index formulas at small n") {
  // n = 0: ind(r) = a_1 + 1, ind(s) = 1
  CHECK(index_r(spec_of("G:3|1"), 0) == Rational(4));
  CHECK(index_s(spec_of("G:3|1"), 0) == Rational(1));
  // Fibonacci at N = 1: 1 + 2 + (1-2)/2 = 5/2
  CHECK(index_r(spec_of("G:1|1"), 1) == Rational(BigInt(5), BigInt(2)));
  // m = 0 case at N = 1: a_1 + 2 + (q'_{-1} - 2)/q'_0 = 2
  CHECK(index_s(spec_of("G:1|1"), 1) == Rational(2));
  // N = 2 uses the q'_{-2} = 1 sentinel chain further down
  CHECK(index_s(spec_of("G:1|1"), 2) == Rational(BigInt(5), BigInt(2)));
}

TEST_CASE("indices agree with the oracle scan") {
  for (const char* txt : {"G:1|1", "G:1|2", "D:2|2,1", "G:1,3|1,1,2"}) {
    CheckResult r = checks::indices_vs_oracle(spec_of(txt), 8, 30000);
    CHECK_MESSAGE(r.pass, txt, ": ", r.detail);
  }
}

TEST_CASE("index scans certify against the prefix") {
  DirectiveSpec spec = spec_of("G:1|2");
  oracle::PrefixIndex idx(generate_prefix(spec, 30000));
  for (uint64_t n = 0; n <= 6; ++n) {
    BispecialWords w = bispecial_word(spec, n);
    oracle::FactorIndexReport rep = oracle::scan_index(idx, w.r);
    CHECK(rep.truncation_safe);
    CHECK(rep.index == index_r(spec, n));
  }
}

TEST_CASE("shortest bispecial sets") {
  // Fibonacci, n = 1: boundary case with two members
  ShortestBispecialSet s1 = shortest_bispecials(spec_of("G:1|1"), 1);
  CHECK(s1.prev_is_bispecial_length);
  CHECK(s1.members == std::vector<uint64_t>{1, 2});
  // n = q'_{N+1} - 1 keeps two members
  ShortestBispecialSet s2 = shortest_bispecials(spec_of("G:1|1"), 7);  // q'_3=5, q'_4=8
  CHECK(s2.prev_is_bispecial_length);
  CHECK(s2.members == std::vector<uint64_t>{4, 5});
  // generic interior n gives three members
  ShortestBispecialSet s3 = shortest_bispecials(spec_of("G:1|1"), 5);
  CHECK_FALSE(s3.prev_is_bispecial_length);
  CHECK(s3.members.size() == 3);
  CHECK_THROWS_AS(shortest_bispecials(spec_of("G:1|1"), 0), std::domain_error);
}

TEST_CASE("shortest bispecial sets agree with the oracle") {
  for (const char* txt : {"G:1|1", "G:2|2", "D:1|1,2"}) {
    CheckResult r = checks::shortest_bs_vs_oracle(spec_of(txt), 40, 30000);
    CHECK_MESSAGE(r.pass, txt, ": ", r.detail);
  }
}

TEST_CASE("sturmian recurrence values") {
  CHECK(sturmian_recurrence(spec_of("G:1|1"), 1) == BigInt(3));
  CHECK(sturmian_recurrence(spec_of("G:1|2"), 3) == BigInt(9));
  // n = q'_N gives q'_{N+1} + 2 q'_N - 1
  CHECK(sturmian_recurrence(spec_of("G:1|2"), 5) == BigInt(12 + 10 - 1));
  CHECK_THROWS_AS(sturmian_recurrence(spec_of("G:1|1"), 0), std::domain_error);
}

TEST_CASE("sturmian critical exponents") {
  // Fibonacci: 3 + 2/(1+sqrt5) = (5+sqrt5)/2
  ExponentValue fib = sturmian_critical_exponent(spec_of("G:1|1"));
  CHECK(fib.value == Surd(BigInt(5), BigInt(1), BigInt(2), BigInt(5)));
  CHECK_FALSE(fib.attained);
  CHECK_FALSE(fib.truncated);
  // G^1 (D^2 G^2)^w: 3 + sqrt2
  ExponentValue s = sturmian_critical_exponent(spec_of("G:1|2,2"));
  CHECK(s.value == Surd(BigInt(3), BigInt(1), BigInt(1), BigInt(2)));
  CHECK_FALSE(s.attained);
  // start letter does not change the Sturmian value
  CHECK(sturmian_critical_exponent(spec_of("D:1|2,2")).value == s.value);
  // finite specs give truncated lower bounds
  ExponentValue fin = sturmian_critical_exponent(spec_of("G:1,1,1,1,1,1"));
  CHECK(fin.truncated);
  CHECK(fin.value < fib.value);
  CHECK(fin.value > Surd(2));
}

TEST_CASE("sturmian critical exponent bounds the oracle scan") {
  DirectiveSpec spec = spec_of("G:2|1,2");
  ExponentValue exact = sturmian_critical_exponent(spec);
  oracle::PrefixIndex idx(generate_prefix(spec, 40000));
  Rational scan = oracle::scan_critical_exponent(idx, 300);
  CHECK(Surd(scan) <= exact.value);
  CHECK(Surd(scan) + Surd(Rational(BigInt(1), BigInt(10))) > exact.value);
}

TEST_CASE("centers of consecutive bispecials alternate within a level") {
  for (const char* txt : {"G:3|2", "D:2|3,1", "G:1,2|2,2"}) {
    DirectiveSpec spec = spec_of(txt);
    // walk levels 0..4; within a level the centers flip between two values
    // and the first bispecial of the next run introduces the third
    uint64_t n = 0;
    for (uint64_t level = 0; level <= 4; ++level) {
      uint64_t a_next = spec.exponent(level + 1);
      std::vector<PalCenter> centers;
      for (uint64_t m = 0; m <= a_next; ++m)
        centers.push_back(palindrome_center(bispecial_word(spec, n + m).b));
      for (size_t i = 0; i + 2 < centers.size(); ++i) {
        CHECK(centers[i] == centers[i + 2]);
        CHECK(centers[i] != centers[i + 1]);
      }
      // BS(M + a_{N+1} + 1) carries the remaining center
      PalCenter third = palindrome_center(bispecial_word(spec, n + a_next + 1).b);
      CHECK(third != centers[a_next - 1]);
      CHECK(third != centers[a_next]);
      n += a_next;
    }
  }
}
