#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hnp {

// Fixed-capacity dynamic bitset over element indices.
class IndexSet {
 public:
  IndexSet() : size_(0) {}
  explicit IndexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  bool is_subset_of(const IndexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // Visits set bits in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace hnp
