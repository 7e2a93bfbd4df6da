#include "word.hpp"

#include <bit>
#include <stdexcept>

namespace rw {

BinaryWord BinaryWord::from_string(std::string_view s) {
  BinaryWord w;
  w.bits_.resize((s.size() + 63) / 64, 0);
  w.len_ = s.size();
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      w.bits_[i >> 6] |= 1ull << (i & 63);
    } else if (s[i] != '0') {
      throw std::invalid_argument("BinaryWord: symbols must be 0 or 1");
    }
  }
  return w;
}

BinaryWord BinaryWord::single(int bit) {
  BinaryWord w;
  w.push_back(bit);
  return w;
}

void BinaryWord::push_back(int bit) {
  if ((len_ & 63) == 0) bits_.push_back(0);
  if (bit) bits_[len_ >> 6] |= 1ull << (len_ & 63);
  ++len_;
}

void BinaryWord::append(const BinaryWord& w) {
  if (&w == this) {
    BinaryWord copy = w;
    append(copy);
    return;
  }
  if ((len_ & 63) == 0) {
    // aligned fast path
    bits_.resize((len_ + w.len_ + 63) / 64, 0);
    size_t base = len_ >> 6;
    for (size_t i = 0; i < w.bits_.size(); ++i) bits_[base + i] = w.bits_[i];
    len_ += w.len_;
    size_t tail = len_ & 63;
    if (tail) bits_.back() &= (~0ull >> (64 - tail));
    return;
  }
  size_t shift = len_ & 63;
  bits_.resize((len_ + w.len_ + 63) / 64, 0);
  size_t base = len_ >> 6;
  bits_[base] &= (~0ull >> (64 - shift));
  for (size_t i = 0; i < w.bits_.size(); ++i) {
    bits_[base + i] |= w.bits_[i] << shift;
    if (base + i + 1 < bits_.size()) bits_[base + i + 1] = w.bits_[i] >> (64 - shift);
  }
  len_ += w.len_;
  size_t tail = len_ & 63;
  if (tail) bits_.back() &= (~0ull >> (64 - tail));
}

BinaryWord BinaryWord::substr(size_t pos, size_t count) const {
  if (pos > len_) throw std::out_of_range("BinaryWord::substr");
  count = std::min(count, len_ - pos);
  BinaryWord out;
  out.len_ = count;
  out.bits_.assign((count + 63) / 64, 0);
  size_t limb = pos >> 6, shift = pos & 63;
  for (size_t i = 0; i < out.bits_.size(); ++i) {
    uint64_t lo = bits_[limb + i] >> shift;
    uint64_t hi = (shift && limb + i + 1 < bits_.size()) ? bits_[limb + i + 1] << (64 - shift) : 0;
    out.bits_[i] = lo | hi;
  }
  size_t tail = count & 63;
  if (tail) out.bits_.back() &= (~0ull >> (64 - tail));
  return out;
}

void BinaryWord::truncate(size_t new_len) {
  if (new_len >= len_) return;
  len_ = new_len;
  bits_.resize((len_ + 63) / 64);
  size_t tail = len_ & 63;
  if (tail) bits_.back() &= (~0ull >> (64 - tail));
}

std::string BinaryWord::to_string() const {
  std::string s(len_, '0');
  for (size_t i = 0; i < len_; ++i)
    if ((*this)[i]) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y) {
  if (x.len_ != y.len_) return x.len_ <=> y.len_;
  for (size_t i = 0; i < x.bits_.size(); ++i) {
    if (x.bits_[i] != y.bits_[i]) {
      // first differing bit decides; limbs are little-endian in bit order
      uint64_t diff = x.bits_[i] ^ y.bits_[i];
      size_t bit = static_cast<size_t>(std::countr_zero(diff));
      return ((x.bits_[i] >> bit) & 1) <=> ((y.bits_[i] >> bit) & 1);
    }
  }
  return std::strong_ordering::equal;
}

BinaryWord s_map(const BinaryWord& v) {
  if (v.empty()) throw std::domain_error("s_map: empty word");
  BinaryWord u;
  for (size_t i = 0; i + 1 < v.size(); ++i) u.push_back(v[i] ^ v[i + 1]);
  return u;
}

BinaryWord s_inverse(const BinaryWord& u) {
  BinaryWord w;
  int cur = 0;
  w.push_back(0);
  for (size_t i = 0; i < u.size(); ++i) {
    cur ^= u[i];
    w.push_back(cur);
  }
  return w;
}

BinaryWord exchange(const BinaryWord& w) {
  BinaryWord out;
  for (size_t i = 0; i < w.size(); ++i) out.push_back(1 - w[i]);
  return out;
}

BinaryWord mirror(const BinaryWord& w) {
  BinaryWord out;
  for (size_t i = w.size(); i-- > 0;) out.push_back(w[i]);
  return out;
}

bool is_palindrome(const BinaryWord& w) {
  for (size_t i = 0, j = w.size(); i < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

size_t BinaryWord::count_ones() const {
  size_t ones = 0;
  for (uint64_t limb : bits_) ones += static_cast<size_t>(std::popcount(limb));
  return ones;
}

ParikhVector parikh(const BinaryWord& w) {
  uint64_t ones = w.count_ones();
  return {w.size() - ones, ones};
}

bool is_stable(const BinaryWord& u) { return parikh(u).ones % 2 == 0; }

PalCenter palindrome_center(const BinaryWord& p) {
  if (!is_palindrome(p)) throw std::domain_error("palindrome_center: not a palindrome");
  if (p.size() % 2 == 0) return PalCenter::Empty;
  return p[p.size() / 2] ? PalCenter::One : PalCenter::Zero;
}

}  // namespace rw
