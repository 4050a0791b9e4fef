#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Fixed 128-bit set. Enough for all triples on 10 points (120) and all
/// pairs on 12 points (66).
struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static constexpr int kBits = 128;

  static Mask128 bit(int i) {
    return i < 64 ? Mask128{std::uint64_t{1} << i, 0} : Mask128{0, std::uint64_t{1} << (i - 64)};
  }
  /// Bits [0, count).
  static Mask128 first(int count) {
    if (count >= 128) return {~std::uint64_t{0}, ~std::uint64_t{0}};
    if (count >= 64) return {~std::uint64_t{0}, count == 64 ? 0 : (~std::uint64_t{0} >> (128 - count))};
    return {count == 0 ? 0 : (~std::uint64_t{0} >> (64 - count)), 0};
  }

  bool test(int i) const { return i < 64 ? (lo >> i) & 1U : (hi >> (i - 64)) & 1U; }
  void set(int i) { *this |= bit(i); }
  void reset(int i) { *this &= ~bit(i); }
  bool empty() const { return (lo | hi) == 0; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  /// Index of the lowest set bit; 128 when empty.
  int lowest() const {
    if (lo != 0) return std::countr_zero(lo);
    if (hi != 0) return 64 + std::countr_zero(hi);
    return 128;
  }

  Mask128 operator~() const { return {~lo, ~hi}; }
  Mask128& operator&=(const Mask128& o) { lo &= o.lo; hi &= o.hi; return *this; }
  Mask128& operator|=(const Mask128& o) { lo |= o.lo; hi |= o.hi; return *this; }
  friend Mask128 operator&(Mask128 a, const Mask128& b) { return a &= b; }
  friend Mask128 operator|(Mask128 a, const Mask128& b) { return a |= b; }
  friend bool operator==(const Mask128&, const Mask128&) = default;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::uint64_t w = lo; w != 0; w &= w - 1) fn(std::countr_zero(w));
    for (std::uint64_t w = hi; w != 0; w &= w - 1) fn(64 + std::countr_zero(w));
  }
};

/// Lexicographically indexed r-subsets of [0, n) for r in {2, 3}: pairs of
/// a simple graph or triples of a triple system.
class SubsetUniverse {
 public:
  /// Throws std::invalid_argument if C(n, r) exceeds Mask128::kBits.
  SubsetUniverse(int n, int arity);

  int vertex_count() const { return n_; }
  int arity() const { return arity_; }
  int size() const { return static_cast<int>(items_.size()); }
  /// Vertices of item i; the third entry is -1 when arity == 2.
  const std::array<Vertex, 3>& item(int i) const { return items_[i]; }
  int index_of(Vertex a, Vertex b) const { return pair_index_[a * n_ + b]; }
  int index_of(Vertex a, Vertex b, Vertex c) const { return triple_index_[(a * n_ + b) * n_ + c]; }
  /// Items containing both u and v.
  const Mask128& containing(Vertex u, Vertex v) const { return pair_cover_[u * n_ + v]; }
  const Mask128& containing(Vertex v) const { return vertex_cover_[v]; }
  Mask128 all() const { return Mask128::first(size()); }

  Mask128 to_mask(const TripleSystem& h) const;
  TripleSystem to_system(const Mask128& m) const;

 private:
  int n_;
  int arity_;
  std::vector<std::array<Vertex, 3>> items_;
  std::vector<int> pair_index_;
  std::vector<int> triple_index_;
  std::vector<Mask128> pair_cover_;
  std::vector<Mask128> vertex_cover_;
};

}  // namespace bergek4
