#include "bergek4/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bergek4 {

namespace {

void check_vertex(const TripleSystem& h, Vertex v) {
  if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("vertex out of range");
}

std::vector<int> degrees(const TripleSystem& h) {
  std::vector<int> d(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const Triple& t : h.edges())
    for (Vertex v : t) ++d[v];
  return d;
}

}  // namespace

int degree(const TripleSystem& h, Vertex v) {
  check_vertex(h, v);
  return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(),
                                        [v](const Triple& t) { return t.contains(v); }));
}

int min_degree(const TripleSystem& h) {
  const auto d = degrees(h);
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

int max_degree(const TripleSystem& h) {
  const auto d = degrees(h);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int codegree(const TripleSystem& h, Pair p) {
  check_vertex(h, p.first);
  check_vertex(h, p.second);
  return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(),
                                        [p](const Triple& t) { return t.contains(p); }));
}

Graph uncovered_graph(const TripleSystem& h) {
  const int n = h.vertex_count();
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(n), 0);
  for (const Triple& t : h.edges()) {
    covered[t[0]] |= (std::uint64_t{1} << t[1]) | (std::uint64_t{1} << t[2]);
    covered[t[1]] |= (std::uint64_t{1} << t[2]);
  }
  std::vector<Pair> w;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!((covered[a] >> b) & 1U)) w.emplace_back(a, b);
  return Graph(n, std::move(w));
}

}  // namespace bergek4
