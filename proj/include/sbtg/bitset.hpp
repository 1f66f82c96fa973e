#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sbtg/errors.hpp"

namespace sbtg {

// Subset of a finite carrier {0, ..., size-1} as a packed bitmask.
// Value semantics; the carrier size is part of the value, and binary
// operations require equal sizes. operator< orders by numeric value of the
// mask (bit i has weight 2^i), which is the canonical order for families.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset singleton(std::size_t size, std::size_t i) {
    Bitset b(size);
    b.set(i);
    return b;
  }

  static Bitset of(std::size_t size, std::initializer_list<std::size_t> bits) {
    Bitset b(size);
    for (std::size_t i : bits) b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  Bitset& operator&=(const Bitset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  // Set difference: bits of *this not in o.
  Bitset minus(const Bitset& o) const {
    check_same(o);
    Bitset r(*this);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }

  Bitset complemented() const { return full(size_).minus(*this); }

  bool intersects(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool operator<(const Bitset& o) const {
    check_same(o);
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
    return false;
  }

  // Lowest set bit, or size() when empty.
  std::size_t first_bit() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
    return size_;
  }

  template <typename Fn>
  void for_each_bit(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        std::size_t i = (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
        fn(i);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> bits() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_bit([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  // Mask value as an integer; requires size() <= 64.
  std::uint64_t to_u64() const {
    if (size_ > 64) throw shape_error("Bitset::to_u64: carrier wider than 64 bits");
    return words_.empty() ? 0 : words_[0];
  }

  static Bitset from_u64(std::size_t size, std::uint64_t mask) {
    if (size > 64) throw shape_error("Bitset::from_u64: carrier wider than 64 bits");
    Bitset b(size);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

 private:
  static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

  void check_index(std::size_t i) const {
    if (i >= size_) throw shape_error("Bitset: index " + std::to_string(i) +
                                      " out of range for carrier of size " + std::to_string(size_));
  }

  void check_same(const Bitset& o) const {
    if (size_ != o.size_)
      throw shape_error("Bitset: carrier sizes differ (" + std::to_string(size_) + " vs " +
                        std::to_string(o.size_) + ")");
  }

  void trim() {
    if (size_ & 63) {
      if (!words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace sbtg
