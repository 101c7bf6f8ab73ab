#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fermenc {

/// Fixed-length bit vector with word-parallel xor/and-popcount.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector& operator&=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  BitVector& operator|=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Clears every bit set in o.
  BitVector& subtract(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  /// popcount(a & b)
  friend std::size_t and_count(const BitVector& a, const BitVector& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) c += std::popcount(a.words_[w] & b.words_[w]);
    return c;
  }

  /// Number of set bits of this vector strictly above index i.
  std::size_t count_above(std::size_t i) const {
    std::size_t c = 0;
    const std::size_t w0 = i >> 6;
    const unsigned sh = static_cast<unsigned>(i & 63);
    if (sh != 63) c += std::popcount(words_[w0] >> (sh + 1));
    for (std::size_t w = w0 + 1; w < words_.size(); ++w) c += std::popcount(words_[w]);
    return c;
  }

  /// Low 64 bits; used for dense indexing where size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace fermenc
