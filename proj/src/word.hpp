#ifndef RW_WORD_HPP
#define RW_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rw {

// Finite word over {0,1}, bit-packed, 0-based indexing.
class BinaryWord {
 public:
  BinaryWord() = default;
  static BinaryWord from_string(std::string_view s);  // '0'/'1' only
  static BinaryWord single(int bit);

  size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  int operator[](size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

  void push_back(int bit);
  void append(const BinaryWord& w);
  BinaryWord substr(size_t pos, size_t count) const;
  void truncate(size_t new_len);
  size_t count_ones() const;

  std::string to_string() const;

  friend bool operator==(const BinaryWord& x, const BinaryWord& y) {
    return x.len_ == y.len_ && x.bits_ == y.bits_;
  }
  // total order: by length, then lexicographic; used for deterministic sets
  friend std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y);

 private:
  std::vector<uint64_t> bits_;
  size_t len_ = 0;
};

struct ParikhVector {
  uint64_t zeros = 0;
  uint64_t ones = 0;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

enum class PalCenter { Empty, Zero, One };

// letterwise difference mod 2 of adjacent symbols; |result| = |v| - 1
BinaryWord s_map(const BinaryWord& v);  // throws std::domain_error on empty input

// the unique preimage starting with 0; |result| = |u| + 1,
// ends with 0 exactly when u is stable
BinaryWord s_inverse(const BinaryWord& u);

BinaryWord exchange(const BinaryWord& w);  // 0 <-> 1
BinaryWord mirror(const BinaryWord& w);
bool is_palindrome(const BinaryWord& w);
ParikhVector parikh(const BinaryWord& w);
bool is_stable(const BinaryWord& u);  // even number of ones

PalCenter palindrome_center(const BinaryWord& p);  // throws on non-palindrome

}  // namespace rw

#endif
