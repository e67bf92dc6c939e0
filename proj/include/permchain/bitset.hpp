#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#if defined(__GNUC__) || defined(__clang__)
#include <bit>
#endif

namespace permchain {

// Fixed-size bit vector used for element masks and lattice order relations.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::size_t intersection_count(const Bitset& other) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    return total;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace permchain
