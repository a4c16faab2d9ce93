#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace clique_spectra {

using Vertex = int;

/// Dynamic bitset over the vertex universe [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.set(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool test(Vertex v) const noexcept { return (words_[word(v)] >> bit(v)) & 1U; }
  void set(Vertex v) noexcept { words_[word(v)] |= std::uint64_t{1} << bit(v); }
  void reset(Vertex v) noexcept { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

 private:
  static std::size_t word(Vertex v) noexcept { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit(Vertex v) noexcept { return static_cast<unsigned>(v) & 63U; }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Single-word vertex set; the fast path for graphs with at most 64 vertices.
class SmallSet {
 public:
  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}

  constexpr bool test(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void set(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void reset(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int count() const noexcept { return std::popcount(bits_); }
  constexpr bool none() const noexcept { return bits_ == 0; }
  constexpr Vertex first() const noexcept {
    return bits_ == 0 ? -1 : static_cast<Vertex>(std::countr_zero(bits_));
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t w = bits_; w != 0; w &= w - 1) f(static_cast<Vertex>(std::countr_zero(w)));
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }

  constexpr SmallSet& operator&=(SmallSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr SmallSet& operator|=(SmallSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr SmallSet& operator-=(SmallSet o) noexcept { bits_ &= ~o.bits_; return *this; }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) noexcept { return a &= b; }
  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) noexcept { return a |= b; }
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) noexcept { return a -= b; }
  friend constexpr bool operator==(SmallSet, SmallSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace clique_spectra
