#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bergek4 {

using Vertex = int;

/// Largest vertex count accepted for a stored triple system.
inline constexpr int kMaxStoredVertices = 64;

/// Unordered vertex pair, stored with first < second.
struct Pair {
  Vertex first = 0;
  Vertex second = 0;

  Pair() = default;
  Pair(Vertex a, Vertex b);

  bool contains(Vertex v) const { return first == v || second == v; }
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A 3-element vertex set, stored in strictly increasing order.
class Triple {
 public:
  Triple() = default;
  /// Sorts the arguments; throws std::invalid_argument on a repeated vertex.
  Triple(Vertex a, Vertex b, Vertex c);

  Vertex operator[](std::size_t i) const { return v_[i]; }
  const std::array<Vertex, 3>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(Vertex v) const { return v_[0] == v || v_[1] == v || v_[2] == v; }
  bool contains(Pair p) const { return contains(p.first) && contains(p.second); }
  /// The vertex of the triple outside `p`; requires contains(p).
  Vertex third(Pair p) const;

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<Vertex, 3> v_{0, 1, 2};
};

/// A 3-uniform hypergraph on vertices [0, n) with set semantics on triples.
/// Immutable after construction; triples are kept in lexicographic order.
class TripleSystem {
 public:
  TripleSystem() = default;
  explicit TripleSystem(int n);
  /// Throws std::invalid_argument if a vertex is out of range or a triple
  /// repeats.
  TripleSystem(int n, std::vector<Triple> edges);
  TripleSystem(int n, std::initializer_list<Triple> edges)
      : TripleSystem(n, std::vector<Triple>(edges)) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Triple> edges() const { return edges_; }
  bool contains(const Triple& t) const;

  /// Copy with `t` added; throws if already present.
  TripleSystem with(const Triple& t) const;
  /// Relabels vertex v as perm[v]; perm must be a permutation of [0, n).
  TripleSystem relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

/// All C(n,3) triples on [0, n) in lexicographic order.
std::vector<Triple> all_triples(int n);

/// C(n, k) with overflow check.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace bergek4
