#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace k4bip {

/// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static constexpr std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }

  int universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool contains(int v) const {
    assert(v >= 0 && v < universe_);
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) {
    assert(v >= 0 && v < universe_);
    words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(int v) {
    assert(v >= 0 && v < universe_);
    words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  int size() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<int>(i) * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

inline int intersection_size(const VertexSet& a, const VertexSet& b) {
  assert(a.universe() == b.universe());
  auto wa = a.words();
  auto wb = b.words();
  int c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) c += std::popcount(wa[i] & wb[i]);
  return c;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  assert(a.universe() == b.universe());
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if ((wa[i] & wb[i]) != 0) return true;
  return false;
}

}  // namespace k4bip
