#include <doctest.h>

#include <stdexcept>

#include "convergents.hpp"
#include "oracle.hpp"
#include "recurrence.hpp"
#include "rote.hpp"
#include "sturmian.hpp"

using namespace rw;

namespace {
DirectiveSpec spec_of(const char* s) { return DirectiveSpec::parse(s); }
}  // namespace

TEST_CASE("closed forms from the flagship directives") {
  // G:1|2,2: R_v(n+1) = 3 q'_{N+1} + q'_N + n on [q'_N, q'_{N+1})
  DirectiveSpec g = spec_of("G:1|2,2");
  // q' = 1, 2, 5, 12, 29
  CHECK(rote_recurrence(g, 1) == BigInt(3 * 2 + 1 + 1));
  CHECK(rote_recurrence(g, 2) == BigInt(3 * 5 + 2 + 2));
  CHECK(rote_recurrence(g, 4) == BigInt(3 * 5 + 2 + 4));
  CHECK(rote_recurrence(g, 5) == BigInt(3 * 12 + 5 + 5));
  CHECK_THROWS_AS(rote_recurrence(g, 0), std::domain_error);

  // D:1|2,2 alternates between the two printed formulas
  DirectiveSpec d = spec_of("D:1|2,2");
  CHECK(rote_recurrence(d, 1) == BigInt(2 * 2 + 1 + 1));        // even level
  CHECK(rote_recurrence(d, 2) == BigInt(12 + 2 * 5 + 2 + 2));   // odd level
  CHECK(rote_recurrence(d, 4) == BigInt(12 + 2 * 5 + 2 + 4));
  CHECK(rote_recurrence(d, 5) == BigInt(2 * 12 + 5 + 5));      // even level again
}

TEST_CASE("pieces tile [1, n_max] and match pointwise") {
  for (const char* txt : {"G:1|1", "G:1|2,2", "D:1|2,2", "G:1,4|2,2"}) {
    DirectiveSpec spec = spec_of(txt);
    auto pieces = recurrence_table(spec, 400);
    REQUIRE(!pieces.empty());
    CHECK(pieces.front().lo == BigInt(1));
    for (size_t i = 0; i + 1 < pieces.size(); ++i) CHECK(pieces[i].hi == pieces[i + 1].lo);
    CHECK(pieces.back().hi > BigInt(400));
    for (const auto& piece : pieces) {
      CHECK(piece.L == longest_rote_return_length(spec, piece.level));
      // pointwise agreement at the interval ends
      uint64_t lo = static_cast<uint64_t>(piece.lo.to_int64());
      CHECK(rote_recurrence(spec, lo) == piece.L + piece.lo);
    }
  }
}

TEST_CASE("Fibonacci table levels") {
  auto pieces = recurrence_table(spec_of("G:1|1"), 20);
  // q' = 1, 2, 3, 5, 8, 13, 21 so levels 0..5 cover n <= 20
  CHECK(pieces.size() == 6);
  CHECK(pieces.back().hi == BigInt(21));
  auto single = recurrence_table(spec_of("G:1|1"), 1);
  CHECK(single.size() == 1);
  CHECK(single[0].level == 0);
}

TEST_CASE("recurrence growth and Sturmian baseline") {
  DirectiveSpec spec = spec_of("G:2|1,2");
  BigInt prev(0);
  for (uint64_t n = 1; n <= 120; ++n) {
    BigInt rote_val = rote_recurrence(spec, n);
    BigInt diff = rote_val - BigInt(n);
    CHECK(diff >= prev);  // R_v(n+1) - n nondecreasing
    prev = diff;
    CHECK(rote_val >= sturmian_recurrence(spec, n));
  }
}

TEST_CASE("oracle agreement on a mixed-parity spec") {
  DirectiveSpec spec = spec_of("G:1,4|2,2");
  oracle::PrefixIndex ro(
      rote_from_sturmian(generate_prefix(spec, 24999), 0));
  for (uint64_t n = 1; n <= 50; ++n) {
    oracle::RecurrenceReport rep = oracle::scan_recurrence(ro, static_cast<size_t>(n) + 1);
    CHECK(rep.certified);
    CHECK(BigInt(rep.value) == rote_recurrence(spec, n));
  }
}

TEST_CASE("csv output") {
  std::string csv = recurrence_table_csv(recurrence_table(spec_of("G:1|2,2"), 4));
  CHECK(csv.find("N,interval_lo,interval_hi,case_tag,L\n") == 0);
  CHECK(csv.find("odd_odd_gt1") != std::string::npos);
}
