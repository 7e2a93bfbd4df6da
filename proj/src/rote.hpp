#ifndef RW_ROTE_HPP
#define RW_ROTE_HPP

#include <cstdint>

#include "bigint.hpp"
#include "directive.hpp"
#include "rational.hpp"
#include "sturmian.hpp"
#include "word.hpp"

namespace rw {

enum class ReturnCase { RStable, SStable, BothUnstable };

// The three return words to the Rote bispecial prefix associated with the
// n-th Sturmian bispecial factor.
struct RoteReturnTriple {
  ReturnCase case_tag;
  BinaryWord A, B, C;
};

struct TransferElement {
  Rational value;  // ind + 1/len for stable sources, half that otherwise
  bool stable;
};

// preimage of u_prefix under the adjacent-difference map, first letter v0;
// |result| = |u_prefix| + 1
BinaryWord rote_from_sturmian(const BinaryWord& u_prefix, int v0);

TransferElement transfer_index(const Rational& u_index, uint64_t u_len, bool stable);

RoteReturnTriple rote_return_triple(const DirectiveSpec& spec, uint64_t n);

// length of the longest return word to the Rote bispecial prefix mapped to
// the Sturmian bispecial of index M + a_{N+1} + 1; the recurrence offset L
BigInt longest_rote_return_length(const DirectiveSpec& spec, uint64_t level);

}  // namespace rw

#endif
