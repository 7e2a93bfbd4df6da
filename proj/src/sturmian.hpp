#ifndef RW_STURMIAN_HPP
#define RW_STURMIAN_HPP

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "convergents.hpp"
#include "directive.hpp"
#include "rational.hpp"
#include "supremum.hpp"
#include "word.hpp"

namespace rw {

struct BigParikh {
  BigInt zeros, ones;
  friend bool operator==(const BigParikh&, const BigParikh&) = default;
};

// n = m + a_0 + a_1 + ... + a_N with 0 <= m < a_{N+1} (a_0 = 0)
struct Decomposition {
  uint64_t level;   // N
  uint64_t offset;  // m
};

// Arithmetic data of the n-th bispecial factor b and its return words r, s.
struct BispecialRecord {
  uint64_t n;
  uint64_t level;   // N
  uint64_t offset;  // m
  BigParikh parikh_b, parikh_r, parikh_s;
  BigInt len_b, len_r, len_s;
  bool stable_r, stable_s;
};

struct BispecialWords {
  BinaryWord b, r, s;
};

struct ShortestBispecialSet {
  uint64_t n;                     // factor length
  uint64_t level;                 // N with q'_N <= n < q'_{N+1}
  uint64_t m;                     // smallest offset with n <= |BS(M+m)|
  bool prev_is_bispecial_length;  // whether n-1 is a bispecial length
  std::vector<uint64_t> members;  // bispecial indices, size 2 or 3
};

Decomposition decompose(const DirectiveSpec& spec, uint64_t n);

// length-letter prefix of the standard Sturmian sequence directed by spec;
// finite truncations work as long as they determine the requested prefix
BinaryWord generate_prefix(const DirectiveSpec& spec, uint64_t length);

BispecialRecord bispecial(const DirectiveSpec& spec, uint64_t n);
BispecialWords bispecial_word(const DirectiveSpec& spec, uint64_t n);

// l >= 1 such that the sequence is a concatenation of blocks r^l s and
// r^{l+1} s for the return words of the n-th bispecial; equals a_{N+1} - m
uint64_t return_block_exponent(const DirectiveSpec& spec, uint64_t n);

Rational index_r(const DirectiveSpec& spec, uint64_t n);
Rational index_s(const DirectiveSpec& spec, uint64_t n);

ShortestBispecialSet shortest_bispecials(const DirectiveSpec& spec, uint64_t n);

// Morse-Hedlund recurrence function R_u(n), n >= 1
BigInt sturmian_recurrence(const DirectiveSpec& spec, uint64_t n);

ExponentValue sturmian_critical_exponent(const DirectiveSpec& spec);

}  // namespace rw

#endif
