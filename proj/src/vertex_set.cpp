#include "spectra/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

namespace {

void check_capacity(std::size_t n) {
  if (n > kMaxVertices) {
    throw UsageError("vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t n) : n_(n) { check_capacity(n); }

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t n, const std::vector<Vertex>& members) : VertexSet(n) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t w = 0; w < n / kWordBits; ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t rest = n % kWordBits; rest != 0) {
    s.words_[n / kWordBits] = (std::uint64_t{1} << rest) - 1;
  }
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (std::size_t w = 0; w < used_words(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w]));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) {
    if (words_[w] != 0) return false;
  }
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                     " vertices");
  }
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) +
                     " vertices");
  }
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return npos;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  Vertex start = v + 1;
  if (start >= n_) return npos;
  std::size_t w = start / kWordBits;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= used_words()) return npos;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t w = 0; w < used_words(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace spectra
