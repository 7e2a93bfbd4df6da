#ifndef RW_SUPREMUM_HPP
#define RW_SUPREMUM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convergents.hpp"
#include "directive.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace rw {

enum class TermTag { M1, M2, M3, IndR, IndS };

std::string term_tag_name(TermTag t);

struct Witness {
  TermTag tag;
  uint64_t level;
};

struct ExponentValue {
  Surd value;
  bool attained = false;   // sup realized by a finite level (not only as a limit)
  bool truncated = false;  // finite spec: value is a certified lower bound only
  std::optional<Witness> witness;              // when attained
  std::optional<Witness> limit_of;             // when not attained: the class limit reached
};

// One candidate value at level N, written over the convergent columns as
//   value = (alpha q'_N + beta q'_{N-1} + gamma) / (delta q'_N + eps q'_{N-1}).
// gamma < 0 for every family in use; the certification rule depends on that.
struct LevelTerm {
  TermTag tag;
  BigInt alpha;
  int64_t beta, gamma, delta, eps;
};

using EmitFn = std::function<std::vector<LevelTerm>(const ConvergentTable&, int64_t level)>;

// Exact supremum of all emitted terms over levels N = 0, 1, 2, ...
// For exact-mode specs the result is certified: enough whole periods are
// examined that no unexamined level can exceed the reported value, using the
// exact contraction of q'_{N-1} - rho q'_N along each residue class.
// Finite specs yield the maximum over the available levels, flagged truncated.
ExponentValue certified_supremum(const DirectiveSpec& spec, const EmitFn& emit);

}  // namespace rw

#endif
