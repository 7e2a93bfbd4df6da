#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "word.hpp"

using namespace rw;

namespace {

struct Rng {
  uint64_t state = 42;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  BinaryWord word(size_t max_len) {
    size_t len = next() % (max_len + 1);
    BinaryWord w;
    for (size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(next() & 1));
    return w;
  }
};

BinaryWord W(const char* s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("s_map on the worked example") {
  CHECK(s_map(W("001110")) == W("01001"));
  CHECK(s_map(W("110001")) == W("01001"));
  CHECK(s_map(W("0")) == W(""));
  CHECK(s_map(W("1")) == W(""));
  CHECK(s_map(W("0011100")) == W("010010"));
  CHECK_THROWS_AS(s_map(W("")), std::domain_error);
}

TEST_CASE("s_inverse picks the 0-prefixed preimage") {
  CHECK(s_inverse(W("01001")) == W("001110"));
  CHECK(s_inverse(W("")) == W("0"));
  CHECK(s_inverse(W("111")) == W("0101"));
}

TEST_CASE("exchange and mirror basics") {
  CHECK(exchange(W("001110")) == W("110001"));
  CHECK(exchange(W("")) == W(""));
  CHECK(exchange(W("01")) == W("10"));
  CHECK(mirror(W("010011")) == W("110010"));
  CHECK(mirror(W("")) == W(""));
}

TEST_CASE("stability and parikh") {
  CHECK(is_stable(W("01001")));
  CHECK_FALSE(is_stable(W("1")));
  CHECK(is_stable(W("")));
  CHECK(parikh(W("001110")) == ParikhVector{3, 3});
  CHECK(parikh(W("")) == ParikhVector{0, 0});
  CHECK(parikh(W("111")) == ParikhVector{0, 3});
}

TEST_CASE("palindrome centers") {
  CHECK(palindrome_center(W("010")) == PalCenter::One);
  CHECK(palindrome_center(W("")) == PalCenter::Empty);
  CHECK(palindrome_center(W("0110")) == PalCenter::Empty);
  CHECK(palindrome_center(W("00100")) == PalCenter::One);
  CHECK_THROWS_AS(palindrome_center(W("01")), std::domain_error);
}

TEST_CASE("properties over random words") {
  Rng rng;
  for (int i = 0; i < 2000; ++i) {
    BinaryWord w = rng.word(120);
    // involutions
    CHECK(exchange(exchange(w)) == w);
    CHECK(mirror(mirror(w)) == w);
    if (!w.empty()) {
      BinaryWord u = s_map(w);
      CHECK(u.size() == w.size() - 1);
      CHECK(s_map(exchange(w)) == u);
      // preimage round trip: w or E(w), whichever starts with 0
      BinaryWord back = s_inverse(u);
      CHECK((back == w || back == exchange(w)));
    }
    BinaryWord u = rng.word(90);
    BinaryWord inv = s_inverse(u);
    CHECK(inv.size() == u.size() + 1);
    CHECK(inv[0] == 0);
    CHECK(s_map(inv) == u);
    // suffix 0 exactly for stable words
    CHECK((inv[inv.size() - 1] == 0) == is_stable(u));
    ParikhVector p = parikh(u);
    CHECK(p.zeros + p.ones == u.size());
  }
}

TEST_CASE("concatenation rule: images glue over one-letter overlaps") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    BinaryWord v = rng.word(60);
    if (v.size() < 2) continue;
    size_t k = 1 + rng.next() % (v.size() - 1);
    BinaryWord left = v.substr(0, k + 1);   // v[0..k]
    BinaryWord right = v.substr(k, v.size() - k);
    BinaryWord glued = s_map(left);
    glued.append(s_map(right));
    CHECK(glued == s_map(v));
  }
}

TEST_CASE("palindrome parity triad matches the center") {
  Rng rng;
  int seen[3] = {0, 0, 0};
  for (int i = 0; i < 3000; ++i) {
    BinaryWord half = rng.word(20);
    BinaryWord pal = half;
    int mode = static_cast<int>(rng.next() % 3);
    if (mode > 0) pal.push_back(mode == 1 ? 0 : 1);
    pal.append(mirror(half));
    ParikhVector p = parikh(pal);
    PalCenter center = palindrome_center(pal);
    ++seen[static_cast<int>(center)];
    bool zeros_even = p.zeros % 2 == 0, ones_even = p.ones % 2 == 0;
    switch (center) {
      case PalCenter::Empty: CHECK((zeros_even && ones_even)); break;
      case PalCenter::Zero: CHECK((!zeros_even && ones_even)); break;
      case PalCenter::One: CHECK((zeros_even && !ones_even)); break;
    }
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("substr append and ordering") {
  BinaryWord w = W("0110100110010110");
  CHECK(w.substr(3, 5) == W("01001"));
  CHECK(w.substr(0, 0) == W(""));
  BinaryWord a = W("01");
  a.append(W("10110"));
  CHECK(a == W("0110110"));
  CHECK(W("0") < W("1"));
  CHECK(W("1") < W("00"));  // shorter sorts first
  CHECK(W("00") < W("01"));
}
