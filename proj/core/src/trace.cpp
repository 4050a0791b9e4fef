#include "bergek4/trace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bergek4 {

namespace {

std::map<Pair, int> link_multiplicities(const TraceMultigraph& t) {
  std::map<Pair, int> mu;
  for (const TraceLink& l : t.links()) ++mu[l.ends];
  return mu;
}

std::vector<Component> connected_components(const TraceMultigraph& t) {
  const int n = t.host_vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const TraceLink& l : t.links()) parent[find(l.ends.first)] = find(l.ends.second);

  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v : t.outer_vertices()) groups[find(v)].push_back(v);
  std::vector<Component> out;
  for (auto& [root, vs] : groups) {
    Component c;
    c.vertices = std::move(vs);
    c.surplus = surplus(t, c.vertices);
    c.bad = c.surplus > static_cast<int>(c.vertices.size());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

/// True if the label masks admit distinct representatives.
bool has_sdr(unsigned a, unsigned b, unsigned c) {
  for (int i = 0; i < 3; ++i) {
    if (!((a >> i) & 1U)) continue;
    for (int j = 0; j < 3; ++j) {
      if (j == i || !((b >> j) & 1U)) continue;
      for (int k = 0; k < 3; ++k) {
        if (k != i && k != j && ((c >> k) & 1U)) return true;
      }
    }
  }
  return false;
}

void require_three(const TraceMultigraph& t) {
  if (t.core().size() != 3) throw std::invalid_argument("operation requires a core of three vertices");
}

std::vector<Vertex> z_vertices(const TraceMultigraph& t, Vertex x, Vertex y) {
  std::vector<Vertex> z;
  for (Vertex v : t.outer_vertices())
    if (v != x && v != y) z.push_back(v);
  return z;
}

std::vector<unsigned> label_unions(const TraceMultigraph& t) {
  std::vector<unsigned> u(static_cast<std::size_t>(t.host_vertex_count()), 0);
  for (const TraceLoop& l : t.loops()) u[l.v] |= t.core_bit(l.label.first) | t.core_bit(l.label.second);
  for (const TraceLink& l : t.links()) {
    u[l.ends.first] |= t.core_bit(l.label);
    u[l.ends.second] |= t.core_bit(l.label);
  }
  return u;
}

}  // namespace

TraceMultigraph::TraceMultigraph(int n, std::vector<Vertex> core, std::vector<TraceLoop> loops, std::vector<TraceLink> links)
    : n_(n), core_(std::move(core)), loops_(std::move(loops)), links_(std::move(links)) {
  std::sort(core_.begin(), core_.end());
  if (n < 0 || n > kMaxStoredVertices) throw std::invalid_argument("trace vertex count out of range");
  if (core_.empty() || static_cast<int>(core_.size()) >= n) throw std::invalid_argument("core must be a proper nonempty subset");
  if (std::adjacent_find(core_.begin(), core_.end()) != core_.end()) throw std::invalid_argument("repeated core vertex");
  if (core_.front() < 0 || core_.back() >= n) throw std::invalid_argument("core vertex out of range");
  if (core_.size() > 8) throw std::invalid_argument("core larger than 8 vertices");

  auto in_core = [&](Vertex v) { return std::binary_search(core_.begin(), core_.end(), v); };
  auto outer = [&](Vertex v) { return v >= 0 && v < n && !in_core(v); };
  for (const TraceLoop& l : loops_) {
    if (!outer(l.v) || !in_core(l.label.first) || !in_core(l.label.second)) throw std::invalid_argument("invalid trace loop");
  }
  for (const TraceLink& l : links_) {
    if (!outer(l.ends.first) || !outer(l.ends.second) || !in_core(l.label)) throw std::invalid_argument("invalid trace link");
  }
  std::sort(loops_.begin(), loops_.end());
  std::sort(links_.begin(), links_.end());
  if (std::adjacent_find(loops_.begin(), loops_.end()) != loops_.end()) throw std::invalid_argument("repeated trace loop");
  if (std::adjacent_find(links_.begin(), links_.end()) != links_.end()) throw std::invalid_argument("repeated trace link");
}

std::vector<Vertex> TraceMultigraph::outer_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (!std::binary_search(core_.begin(), core_.end(), v)) out.push_back(v);
  return out;
}

bool TraceMultigraph::is_outer(Vertex v) const {
  return v >= 0 && v < n_ && !std::binary_search(core_.begin(), core_.end(), v);
}

int TraceMultigraph::loop_multiplicity(Vertex v) const {
  return static_cast<int>(std::count_if(loops_.begin(), loops_.end(), [v](const TraceLoop& l) { return l.v == v; }));
}

int TraceMultigraph::link_multiplicity(Pair e) const {
  return static_cast<int>(std::count_if(links_.begin(), links_.end(), [e](const TraceLink& l) { return l.ends == e; }));
}

unsigned TraceMultigraph::core_bit(Vertex a) const {
  const auto it = std::lower_bound(core_.begin(), core_.end(), a);
  if (it == core_.end() || *it != a) return 0;
  return 1U << static_cast<unsigned>(it - core_.begin());
}

TraceMultigraph trace(const TripleSystem& h, std::span<const Vertex> core) {
  std::vector<Vertex> a(core.begin(), core.end());
  std::sort(a.begin(), a.end());
  const int n = h.vertex_count();
  if (a.empty() || static_cast<int>(a.size()) >= n) throw std::invalid_argument("core must be a proper nonempty subset");
  auto in_core = [&](Vertex v) { return std::binary_search(a.begin(), a.end(), v); };

  std::vector<TraceLoop> loops;
  std::vector<TraceLink> links;
  for (const Triple& t : h.edges()) {
    std::vector<Vertex> inside;
    std::vector<Vertex> outside;
    for (Vertex v : t) (in_core(v) ? inside : outside).push_back(v);
    if (inside.size() == 2) loops.push_back({outside[0], Pair(inside[0], inside[1])});
    if (inside.size() == 1) links.push_back({Pair(outside[0], outside[1]), inside[0]});
  }
  return TraceMultigraph(n, std::move(a), std::move(loops), std::move(links));
}

int surplus(const TraceMultigraph& t) {
  const auto mu = link_multiplicities(t);
  return static_cast<int>(t.size()) - static_cast<int>(mu.size());
}

int surplus(const TraceMultigraph& t, std::span<const Vertex> vertices) {
  std::vector<bool> in(static_cast<std::size_t>(t.host_vertex_count()), false);
  for (Vertex v : vertices) in[v] = true;
  int s = 0;
  for (const TraceLoop& l : t.loops())
    if (in[l.v]) ++s;
  std::map<Pair, int> mu;
  for (const TraceLink& l : t.links())
    if (in[l.ends.first] && in[l.ends.second]) ++mu[l.ends];
  for (const auto& [e, m] : mu) s += m - 1;
  return s;
}

Graph simple_reduction(const TraceMultigraph& t) {
  std::vector<Pair> edges;
  for (const auto& [e, m] : link_multiplicities(t)) edges.push_back(e);
  return Graph(t.host_vertex_count(), std::move(edges));
}

TraceMultigraph surplus_subgraph(const TraceMultigraph& t) {
  const auto mu = link_multiplicities(t);
  std::vector<TraceLink> multi;
  for (const TraceLink& l : t.links())
    if (mu.at(l.ends) >= 2) multi.push_back(l);
  return TraceMultigraph(t.host_vertex_count(), t.core(), {t.loops().begin(), t.loops().end()}, std::move(multi));
}

std::vector<Component> components(const TraceMultigraph& t) { return connected_components(t); }

std::vector<Component> blocks(const TraceMultigraph& t) { return connected_components(surplus_subgraph(t)); }

std::string to_string(BadShape s) {
  switch (s) {
    case BadShape::TripleLoop:
      return "triple-loop";
    case BadShape::MStar:
      return "m-star";
    case BadShape::DoubleLoop:
      return "double-loop";
    case BadShape::Dumbbell:
      return "dumbbell";
    case BadShape::Other:
      break;
  }
  return "other";
}

BadComponentClass classify_bad_component(const TraceMultigraph& t, const Component& c) {
  if (!c.bad || c.vertices.empty()) return {};
  std::map<Vertex, int> loops;
  for (Vertex v : c.vertices) loops[v] = t.loop_multiplicity(v);
  std::map<Pair, int> mu;
  for (const TraceLink& l : t.links())
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), l.ends.first)) ++mu[l.ends];

  const std::size_t size = c.vertices.size();
  if (size == 1) {
    const Vertex v = c.vertices.front();
    if (loops[v] == 3) return {BadShape::TripleLoop, 0, v};
    if (loops[v] == 2) return {BadShape::DoubleLoop, 0, v};
    return {};
  }
  if (size == 2) {
    const Vertex a = c.vertices[0];
    const Vertex b = c.vertices[1];
    if (mu.size() == 1 && mu.begin()->second == 2) {
      const int la = loops[a];
      const int lb = loops[b];
      if ((la == 1 && lb == 1) || (la == 2 && lb == 0)) return {BadShape::Dumbbell, 0, a};
      if (la == 0 && lb == 2) return {BadShape::Dumbbell, 0, b};
    }
    return {};
  }
  for (Vertex centre : c.vertices) {
    if (loops[centre] != 2) continue;
    bool star = mu.size() == size - 1;
    for (const auto& [e, m] : mu) star = star && m == 2 && e.contains(centre);
    for (Vertex v : c.vertices) star = star && (v == centre || loops[v] == 0);
    if (star) return {BadShape::MStar, static_cast<int>(size), centre};
  }
  return {};
}

ZPartition z_partition(const TraceMultigraph& t, Vertex x, Vertex y) {
  require_three(t);
  const auto unions = label_unions(t);
  ZPartition z;
  for (Vertex v : z_vertices(t, x, y)) z[unions[v]].push_back(v);
  return z;
}

std::vector<SdrViolation> check_no_sdr(const TraceMultigraph& t, Vertex x, Vertex y) {
  require_three(t);
  std::vector<SdrViolation> out;
  for (Vertex z : z_vertices(t, x, y)) {
    std::vector<std::pair<unsigned, Triple>> at;
    for (const TraceLoop& l : t.loops())
      if (l.v == z) at.emplace_back(t.core_bit(l.label.first) | t.core_bit(l.label.second), t.source(l));
    for (const TraceLink& l : t.links())
      if (l.ends.contains(z)) at.emplace_back(t.core_bit(l.label), t.source(l));
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j)
        for (std::size_t k = j + 1; k < at.size(); ++k)
          if (has_sdr(at[i].first, at[j].first, at[k].first)) {
            out.push_back({z, {at[i].second, at[j].second, at[k].second}});
          }
  }
  return out;
}

std::vector<MultiplicityViolation> check_multiplicity_props(const TraceMultigraph& t, Vertex x, Vertex y) {
  require_three(t);
  std::vector<MultiplicityViolation> out;
  const auto zs = z_vertices(t, x, y);
  std::vector<bool> in_z(static_cast<std::size_t>(t.host_vertex_count()), false);
  for (Vertex v : zs) in_z[v] = true;
  const auto cls = label_unions(t);
  const auto mu = link_multiplicities(t);
  std::vector<int> link_degree(static_cast<std::size_t>(t.host_vertex_count()), 0);
  for (const TraceLink& l : t.links()) {
    ++link_degree[l.ends.first];
    ++link_degree[l.ends.second];
  }

  for (Vertex z : zs) {
    const int lm = t.loop_multiplicity(z);
    if (lm > 2) out.push_back({1, {z}, "loop multiplicity " + std::to_string(lm)});
    if (lm >= 2) {
      if (link_degree[z] > 0) out.push_back({2, {z}, "double loop on a vertex with links"});
      if (cls[z] != 0b111) out.push_back({2, {z}, "double loop outside Z_123"});
    }
  }
  for (const auto& [e, m] : mu) {
    if (!in_z[e.first] || !in_z[e.second]) continue;
    if (m > 2) out.push_back({1, {e.first, e.second}, "link multiplicity " + std::to_string(m)});
    if (m >= 2 && (cls[e.first] != cls[e.second] || std::popcount(cls[e.first]) != 2)) {
      out.push_back({3, {e.first, e.second}, "multiple link not inside a single Z_ij"});
    }
  }
  // Property 4: centre v2 with double links to v1 and v3, all in one Z_ij.
  for (Vertex v2 : zs) {
    if (std::popcount(cls[v2]) != 2) continue;
    std::vector<Vertex> ends;
    for (const auto& [e, m] : mu) {
      if (m != 2 || !e.contains(v2)) continue;
      const Vertex other = e.first == v2 ? e.second : e.first;
      if (in_z[other] && cls[other] == cls[v2]) ends.push_back(other);
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = 0; j < ends.size(); ++j) {
        if (i == j) continue;
        const Vertex v1 = ends[i];
        const Vertex v3 = ends[j];
        // v3 may only carry its double link to v2.
        if (t.loop_multiplicity(v3) > 0 || link_degree[v3] > 2) {
          out.push_back({4, {v1, v2, v3}, "extra loop or link at the end of a double-link path"});
        }
      }
    }
  }
  return out;
}

bool check_bad_components_have_bad_block(const TraceMultigraph& t) {
  const auto bl = blocks(t);
  std::vector<bool> vertex_in_bad_block(static_cast<std::size_t>(t.host_vertex_count()), false);
  for (const Component& b : bl)
    if (b.bad)
      for (Vertex v : b.vertices) vertex_in_bad_block[v] = true;
  for (const Component& c : components(t)) {
    if (!c.bad) continue;
    const bool ok = std::any_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return vertex_in_bad_block[v]; });
    if (!ok) return false;
  }
  return true;
}

}  // namespace bergek4
