#ifndef RW_VERIFY_HPP
#define RW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "directive.hpp"
#include "rational.hpp"

namespace rw {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // short failure note, empty on pass
};

// Formula-vs-oracle equivalence checks on one spec.  Each returns pass/fail
// plus a short reason; bounds are explicit so callers can pin them.
namespace checks {

CheckResult complexity_profile(const DirectiveSpec& spec, size_t prefix_len, size_t n_max);
CheckResult parikh_vs_brute(const DirectiveSpec& spec, uint64_t n_max, size_t max_word_len);
CheckResult indices_vs_oracle(const DirectiveSpec& spec, uint64_t n_max, size_t prefix_len);
CheckResult shortest_bs_vs_oracle(const DirectiveSpec& spec, uint64_t n_max, size_t prefix_len);
CheckResult rote_returns_vs_oracle(const DirectiveSpec& spec, uint64_t n_max, size_t prefix_len);
CheckResult recurrences_vs_oracle(const DirectiveSpec& spec, uint64_t n_max, size_t prefix_len);
CheckResult unique_palindromic_extension(const DirectiveSpec& spec, size_t n_max,
                                         size_t prefix_len);
CheckResult exchange_closure(const DirectiveSpec& spec, size_t n_max, size_t prefix_len);
CheckResult transfer_relation(const DirectiveSpec& spec, size_t max_len, size_t prefix_len);
CheckResult exponent_scan_agreement(const DirectiveSpec& spec, size_t max_root_len,
                                    size_t prefix_len, const Rational& tolerance);

}  // namespace checks

// the oracle-vs-formula suite at a given depth; depth bounds the bispecial
// indices and scales factor lengths and prefix sizes
std::vector<CheckResult> verify_spec(const DirectiveSpec& spec, uint32_t depth);

}  // namespace rw

#endif
