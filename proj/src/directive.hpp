#ifndef RW_DIRECTIVE_HPP
#define RW_DIRECTIVE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rw {

enum class Morphism { G, D };

// Directive sequence of a standard Sturmian sequence, encoded by the start
// letter and the run exponents a_1 a_2 a_3 ...  The letters alternate from
// `start`, so the exponents determine the whole sequence.  An empty period
// marks a finite truncation usable only by oracle-style consumers.
struct DirectiveSpec {
  enum class Start { G, D };

  Start start = Start::G;
  std::vector<uint64_t> preperiod;  // a_1 .. a_k
  std::vector<uint64_t> period;     // repeated forever; empty = finite

  bool exact() const { return !period.empty(); }
  size_t preperiod_length() const { return preperiod.size(); }

  // a_i for i >= 1; a_0 == 0 by convention (callers handle i == 0).
  // Throws InsufficientDirectiveError when a finite spec runs out.
  uint64_t exponent(uint64_t i) const;

  // number of a_i terms available (finite specs), SIZE_MAX for exact mode
  uint64_t known_terms() const;

  // morphism of run i (the letter of a_i), i >= 1
  Morphism run_letter(uint64_t i) const;

  // text form START ':' pre [ '|' period ], lists comma-separated
  static DirectiveSpec parse(std::string_view s);  // throws ParseError
  std::string render() const;

  // same eventually periodic sequence, minimal period then minimal preperiod
  DirectiveSpec canonical() const;

  friend bool operator==(const DirectiveSpec&, const DirectiveSpec&) = default;
};

}  // namespace rw

#endif
