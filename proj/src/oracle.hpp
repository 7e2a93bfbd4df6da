#ifndef RW_ORACLE_HPP
#define RW_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace rw {
namespace oracle {

// Suffix-array index over one finite prefix.  Exact over the prefix by
// construction; everything a scan reports is a statement about the prefix,
// and the certification flags say when it transfers to the full sequence.
class PrefixIndex {
 public:
  explicit PrefixIndex(const BinaryWord& prefix);

  size_t size() const { return text_.size(); }
  int at(size_t i) const { return text_[i]; }
  BinaryWord slice(size_t pos, size_t len) const;

  struct FactorGroup {
    std::vector<uint32_t> occurrences;  // increasing positions
    bool left[2] = {false, false};      // observed left extensions
    bool right[2] = {false, false};     // observed right extensions
  };

  // distinct factors of length n, in lexicographic order
  std::vector<FactorGroup> factors(size_t n) const;
  size_t complexity(size_t n) const;  // distinct factors of length n
  bool contains(const BinaryWord& w) const;
  std::vector<uint32_t> occurrences(const BinaryWord& w) const;

 private:
  std::vector<uint8_t> text_;
  std::vector<int32_t> sa_, rank_, lcp_;
  std::pair<size_t, size_t> sa_range(const BinaryWord& w) const;
};

struct FactorIndexReport {
  BinaryWord factor;
  Rational index;            // largest e with factor^e occurring in the prefix
  uint64_t power_length = 0; // length of the maximal fractional power
  bool truncation_safe = false;  // the maximal power is followed by a breaking letter
};

struct RecurrenceReport {
  uint64_t value = 0;  // R(n) as observed on the prefix (a lower bound)
  bool certified = false;
};

// bispecial factors of length <= max_len, sorted by length;
// throws TruncationError when max_len leaves no safety margin
std::vector<BinaryWord> scan_bispecials(const PrefixIndex& idx, size_t max_len);

// shortest entry of `bispecials` containing w (the list must be length-sorted);
// throws TruncationError when none contains w
BinaryWord shortest_bispecial_containing(const PrefixIndex& idx,
                                         const std::vector<BinaryWord>& bispecials,
                                         const BinaryWord& w);

// distinct return words to w, by increasing (length, lex) order;
// throws InsufficientDataError when w occurs fewer than twice
std::vector<BinaryWord> scan_return_words(const PrefixIndex& idx, const BinaryWord& w);

FactorIndexReport scan_index(const PrefixIndex& idx, const BinaryWord& u);

RecurrenceReport scan_recurrence(const PrefixIndex& idx, size_t n);

// max of scan_index over return words to bispecials with root length at most
// max_root_len; a certified lower bound for the critical exponent
Rational scan_critical_exponent(const PrefixIndex& idx, size_t max_root_len);

// every factor of idx of length n (first occurrence before the margin) whose
// letter-exchange image is missing from `flipped` disqualifies closure
bool factors_closed_under_exchange(const PrefixIndex& idx, const PrefixIndex& flipped,
                                   size_t n, size_t margin);

struct PalExtReport {
  BinaryWord word;
  int extension_count;  // letters a with a w a occurring
  uint32_t first_pos;
};

// palindromic factors of length n together with their palindromic extension
// counts; used for the unique-extension property
std::vector<PalExtReport> palindrome_extension_counts(const PrefixIndex& idx, size_t n);

}  // namespace oracle
}  // namespace rw

#endif
