#include "bergek4/triple_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bergek4 {

Pair::Pair(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("pair with repeated vertex " + std::to_string(a));
  first = std::min(a, b);
  second = std::max(a, b);
}

Triple::Triple(Vertex a, Vertex b, Vertex c) : v_{a, b, c} {
  std::sort(v_.begin(), v_.end());
  if (v_[0] == v_[1] || v_[1] == v_[2]) {
    throw std::invalid_argument("triple with repeated vertex");
  }
}

Vertex Triple::third(Pair p) const {
  for (Vertex v : v_) {
    if (v != p.first && v != p.second) return v;
  }
  return -1;
}

TripleSystem::TripleSystem(int n) : n_(n) {
  if (n < 0 || n > kMaxStoredVertices) {
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  }
}

TripleSystem::TripleSystem(int n, std::vector<Triple> edges) : TripleSystem(n) {
  for (const Triple& t : edges) {
    if (t[0] < 0 || t[2] >= n) {
      throw std::invalid_argument("triple vertex out of range [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate triple");
  }
  edges_ = std::move(edges);
}

bool TripleSystem::contains(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

TripleSystem TripleSystem::with(const Triple& t) const {
  std::vector<Triple> e = edges_;
  e.push_back(t);
  return TripleSystem(n_, std::move(e));
}

TripleSystem TripleSystem::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<Triple> e;
  e.reserve(edges_.size());
  for (const Triple& t : edges_) e.emplace_back(perm[t[0]], perm[t[1]], perm[t[2]]);
  return TripleSystem(n_, std::move(e));
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) out.emplace_back(a, b, c);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    std::int64_t num;
    if (__builtin_mul_overflow(r, n - k + i, &num)) throw std::overflow_error("binomial overflow");
    r = num / i;
  }
  return r;
}

}  // namespace bergek4
