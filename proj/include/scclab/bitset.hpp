#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scclab {

/// Fixed-capacity bitset over machine words. Capacity is chosen at construction
/// and all binary operations require equal capacities.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t capacity() const { return bits_; }

  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & o.words_[k]) != 0) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }

  /// |this ∩ o| without materializing the intersection.
  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  /// this := this \ o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Index of the first set bit at or after `from`, or capacity() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) {
        std::size_t i = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        return i < bits_ ? i : bits_;
      }
      if (++k == words_.size()) return bits_;
      w = words_[k];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace scclab
