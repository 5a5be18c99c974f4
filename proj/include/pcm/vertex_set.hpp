#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pcm/kernels.hpp"

namespace pcm {

/// Dense bitset over a fixed vertex universe [0, n). Backs adjacency rows
/// and the candidate / removed / skip sets of the clique solvers.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  std::size_t num_words() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >>
            (static_cast<std::size_t>(v) & 63)) &
           1;
  }
  void insert(int v) {
    words_[static_cast<std::size_t>(v) >> 6] |=
        std::uint64_t{1} << (static_cast<std::size_t>(v) & 63);
  }
  void erase(int v) {
    words_[static_cast<std::size_t>(v) >> 6] &=
        ~(std::uint64_t{1} << (static_cast<std::size_t>(v) & 63));
  }
  void clear() { words_.assign(words_.size(), 0); }

  std::size_t count() const {
    return kernels::popcount(words_.data(), words_.size());
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t intersection_count(const VertexSet& o) const {
    return kernels::and_popcount(words_.data(), o.words_.data(),
                                 words_.size());
  }
  bool intersects(const VertexSet& o) const {
    return kernels::and_any(words_.data(), o.words_.data(), words_.size());
  }
  VertexSet intersect(const VertexSet& o) const {
    VertexSet r(n_);
    kernels::and_store(words_.data(), o.words_.data(), r.words_.data(),
                       words_.size());
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      r.words_[w] = words_[w] & ~o.words_[w];
    }
    return r;
  }
  void and_with(const VertexSet& o) {
    kernels::and_store(words_.data(), o.words_.data(), words_.data(),
                       words_.size());
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        out.push_back(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pcm
