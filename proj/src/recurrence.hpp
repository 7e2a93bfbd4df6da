#ifndef RW_RECURRENCE_HPP
#define RW_RECURRENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "directive.hpp"

namespace rw {

// One interval [q'_N, q'_{N+1}) on which R_v(n+1) = L + n.
struct RecurrencePiece {
  uint64_t level;       // N
  BigInt lo, hi;        // interval [lo, hi) of Sturmian lengths n
  std::string case_tag; // parity pair of the selected column at (N, N+1), a_{N+2} side
  BigInt L;
};

// R_v(n+1) for the CS Rote sequence of the spec, input n >= 1
BigInt rote_recurrence(const DirectiveSpec& spec, uint64_t n);

// pieces covering n = 1 .. n_max
std::vector<RecurrencePiece> recurrence_table(const DirectiveSpec& spec, uint64_t n_max);

std::string recurrence_table_csv(const std::vector<RecurrencePiece>& pieces);

}  // namespace rw

#endif
