#include "bergek4/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bergek4 {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > 64) throw std::invalid_argument("graph vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, std::vector<Pair> edges) : Graph(n) {
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("repeated graph edge");
  }
  for (const Pair& p : edges) {
    if (p.first < 0 || p.second >= n) throw std::invalid_argument("graph edge out of range");
    adj_[p.first] |= std::uint64_t{1} << p.second;
    adj_[p.second] |= std::uint64_t{1} << p.first;
  }
  edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[u] >> v) & 1U;
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

Graph complete_graph(int k) {
  std::vector<Pair> e;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph(k, std::move(e));
}

bool has_clique(const Graph& g, std::uint64_t candidates, int size) {
  if (size <= 0) return true;
  if (std::popcount(candidates) < size) return false;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(g, candidates & g.neighbours(v), size - 1)) return true;
  }
  return false;
}

}  // namespace bergek4
