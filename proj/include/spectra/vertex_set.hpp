#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spectra {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = 512;

/// Fixed-capacity bitset over the vertices 0..size()-1 of one graph.
///
/// Binary operations require both operands to index the same vertex count;
/// the result never contains bits at or above size().
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = kMaxVertices / kWordBits;
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t n);
  VertexSet(std::size_t n, std::initializer_list<Vertex> members);
  VertexSet(std::size_t n, const std::vector<Vertex>& members);

  static VertexSet full(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept { words_.fill(0); }

  /// Smallest member, or npos.
  Vertex first() const noexcept;
  /// Smallest member strictly greater than v, or npos.
  Vertex next(Vertex v) const noexcept;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < used_words(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Lexicographic order on the sorted member lists; used for deterministic output.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t used_words() const noexcept { return (n_ + kWordBits - 1) / kWordBits; }

  std::array<std::uint64_t, kWords> words_{};
  std::size_t n_ = 0;
};

}  // namespace spectra
