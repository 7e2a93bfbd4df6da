#ifndef RW_EXPONENT_HPP
#define RW_EXPONENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "directive.hpp"
#include "rational.hpp"
#include "supremum.hpp"

namespace rw {

struct MElement {
  TermTag tag;  // M1, M2 or M3
  Rational value;
};

// candidate elements contributed by level N to the three supremum sets:
// the level always feeds M1 (parity even) or M2 (parity odd), and feeds M3
// when both trailing parities are odd, a_{N+1} > 1 and N >= 1; parity is read
// from the q column for G-start specs and from p for D-start
std::vector<MElement> m_element(const DirectiveSpec& spec, uint64_t level);

// exact critical exponent of the CS Rote sequence built on the spec
ExponentValue critical_exponent(const DirectiveSpec& spec);

// matches the four directive families whose Rote critical exponent is <= 3;
// family 1 has value 2 + 1/sqrt(2), families 2-4 have value 3
std::optional<int> classify_small(const DirectiveSpec& spec);

struct ParsedBlock {
  std::string tag;  // "L0", "L1", "L2", "L3"
  std::vector<uint64_t> content;
  bool repeats_forever = false;  // L3 tail, or the final block of the cycle
};

struct BlockParse {
  bool verdict;  // critical exponent < 7/2
  std::vector<ParsedBlock> blocks;
};

// block characterization of G-start directives with Rote critical exponent
// below 7/2: exponents parse into blocks 111 (prefix only), s1 with s in
// {2,4}, c{2,4}*31 with c in {1,3}, or an infinite c{2,4}^w tail
BlockParse below_seven_halves(const DirectiveSpec& spec);  // throws ScopeError on D-start

struct SweepRow {
  DirectiveSpec spec;
  ExponentValue exponent;
};

struct SweepBounds {
  uint32_t max_preperiod = 0;
  uint32_t max_period = 2;
  uint32_t max_exponent = 2;
  int start_filter = -1;  // -1 both, 0 G only, 1 D only
};

// deterministic enumeration of canonical specs within the bounds
std::vector<SweepRow> exponent_sweep(const SweepBounds& bounds);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace rw

#endif
