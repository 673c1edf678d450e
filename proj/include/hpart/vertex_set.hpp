#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hpart {

using Vertex = int;

// Vertex ids are dense integers in [0, n). Kernels (subset DP, model search)
// need O(1) set intersection, so sets are fixed-width bitsets and graphs are
// capped at kMaxVertices vertices.
constexpr int kMaxVertices = 128;

class VertexSet {
 public:
  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) add(v);
  }

  static VertexSet single(Vertex v) {
    VertexSet s;
    s.add(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet full(int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.add(i);
    return s;
  }

  static VertexSet of(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
  }

  void add(Vertex v) { w_[word(v)] |= bit(v); }
  void remove(Vertex v) { w_[word(v)] &= ~bit(v); }
  bool contains(Vertex v) const { return (w_[word(v)] & bit(v)) != 0; }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  bool empty() const { return w_[0] == 0 && w_[1] == 0; }
  bool any() const { return !empty(); }

  // Smallest member; -1 when empty.
  Vertex first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Smallest member greater than v; -1 when none.
  Vertex next(Vertex v) const {
    for (int i = v + 1; i < kMaxVertices; i += 0) {
      int wi = word(i);
      std::uint64_t rest = w_[wi] >> (i & 63);
      if (rest) return i + std::countr_zero(rest);
      i = (wi + 1) * 64;
    }
    return -1;
  }

  VertexSet operator|(const VertexSet& o) const {
    return VertexSet(w_[0] | o.w_[0], w_[1] | o.w_[1]);
  }
  VertexSet operator&(const VertexSet& o) const {
    return VertexSet(w_[0] & o.w_[0], w_[1] & o.w_[1]);
  }
  // set difference
  VertexSet operator-(const VertexSet& o) const {
    return VertexSet(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]);
  }
  VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  bool operator==(const VertexSet& o) const = default;

  bool intersects(const VertexSet& o) const {
    return (w_[0] & o.w_[0]) || (w_[1] & o.w_[1]);
  }
  bool subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL;
    h ^= w_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  struct Iterator {
    const VertexSet* s;
    Vertex v;
    Vertex operator*() const { return v; }
    Iterator& operator++() {
      v = s->next(v);
      return *this;
    }
    bool operator!=(const Iterator& o) const { return v != o.v; }
  };
  Iterator begin() const { return {this, first()}; }
  Iterator end() const { return {this, -1}; }

 private:
  constexpr VertexSet(std::uint64_t a, std::uint64_t b) : w_{a, b} {}
  static int word(Vertex v) { return v >> 6; }
  static std::uint64_t bit(Vertex v) {
    return std::uint64_t{1} << (v & 63);
  }

  std::array<std::uint64_t, 2> w_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace hpart
