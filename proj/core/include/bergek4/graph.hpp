#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Simple undirected graph on [0, n), n <= 64. Used for Berge patterns,
/// uncovered-pair graphs, simple reductions of traces and Turán witnesses.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on out-of-range vertices or repeated pairs.
  Graph(int n, std::vector<Pair> edges);
  Graph(int n, std::initializer_list<Pair> edges) : Graph(n, std::vector<Pair>(edges)) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Pair> edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Neighbourhood of v as a bitmask.
  std::uint64_t neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Target graph G of a Berge-G containment question.
using PatternGraph = Graph;

Graph complete_graph(int k);

/// True if some `size` vertices of the bitmask `candidates` are pairwise
/// adjacent in g.
bool has_clique(const Graph& g, std::uint64_t candidates, int size);

}  // namespace bergek4
