#pragma once

// Slow reference implementations used to cross-check the library. None of
// these call into the matching-based detector, the canonical labeller or
// the search engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bergek4/graph.hpp"
#include "bergek4/text_format.hpp"
#include "bergek4/trace.hpp"
#include "bergek4/triple_system.hpp"

namespace oracle {

using bergek4::Graph;
using bergek4::Pair;
using bergek4::TraceMultigraph;
using bergek4::Triple;
using bergek4::TripleSystem;
using bergek4::Vertex;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt f_big(std::int64_t n) {
  const BigInt a = n / 3, b = (n + 1) / 3, c = (n + 2) / 3;
  return a * b * c;
}

/// Counts the triples of [0, n) meeting three consecutive blocks of
/// sizes floor(n/3), floor((n+1)/3), floor((n+2)/3) by direct enumeration.
inline std::int64_t f_by_enumeration(int n) {
  const int a = n / 3, b = (n + 1) / 3;
  auto part = [&](int v) { return v < a ? 0 : (v < a + b ? 1 : 2); };
  std::int64_t count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (part(x) != part(y) && part(y) != part(z) && part(x) != part(z)) ++count;
  return count;
}

/// Searches every injective placement of the pattern (ordered k-tuples,
/// no symmetry reduction) and every assignment of distinct triples to the
/// placed pattern edges. `accept` sees the placement and the chosen
/// triples and may reject a complete assignment.
inline bool berge_bruteforce(const TripleSystem& h, const Graph& g,
                             const std::function<bool(const std::vector<Vertex>&, const std::vector<Triple>&)>& accept) {
  const int n = h.vertex_count();
  const int k = g.vertex_count();
  if (k > n) return false;
  const auto edges = g.edges();
  const auto triples = h.edges();
  std::vector<Vertex> place(static_cast<std::size_t>(k));
  std::vector<bool> used_vertex(static_cast<std::size_t>(n), false);
  std::vector<bool> used_triple(triples.size(), false);
  std::vector<Triple> chosen;

  std::function<bool(std::size_t)> assign = [&](std::size_t e) -> bool {
    if (e == edges.size()) return accept(place, chosen);
    const Vertex u = place[edges[e].first], v = place[edges[e].second];
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (used_triple[i] || !triples[i].contains(u) || !triples[i].contains(v)) continue;
      used_triple[i] = true;
      chosen.push_back(triples[i]);
      const bool ok = assign(e + 1);
      chosen.pop_back();
      used_triple[i] = false;
      if (ok) return true;
    }
    return false;
  };
  std::function<bool(int)> choose = [&](int i) -> bool {
    if (i == k) return assign(0);
    for (Vertex v = 0; v < n; ++v) {
      if (used_vertex[v]) continue;
      used_vertex[v] = true;
      place[i] = v;
      const bool ok = choose(i + 1);
      used_vertex[v] = false;
      if (ok) return true;
    }
    return false;
  };
  return choose(0);
}

inline bool contains_berge(const TripleSystem& h, const Graph& g) {
  return berge_bruteforce(h, g, [](const auto&, const auto&) { return true; });
}

/// Some Berge copy that is not the expansion: either a chosen triple lies
/// inside the core, or two chosen triples share their extra vertex.
inline bool contains_non_expansion(const TripleSystem& h, const Graph& g) {
  return berge_bruteforce(h, g, [&](const std::vector<Vertex>& place, const std::vector<Triple>& chosen) {
    std::set<Vertex> extras;
    for (std::size_t e = 0; e < chosen.size(); ++e) {
      Vertex extra = -1;
      for (Vertex v : chosen[e])
        if (std::find(place.begin(), place.end(), v) == place.end()) extra = v;
      if (extra < 0 || !extras.insert(extra).second) return true;
    }
    return false;
  });
}

/// Literal reading for K4: every 4-set and every 6-tuple of distinct
/// triples covering its six pairs.
inline bool contains_berge_k4_literal(const TripleSystem& h) {
  const int n = h.vertex_count();
  const auto triples = h.edges();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const Pair pairs[6] = {{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
          std::vector<std::vector<std::size_t>> options(6);
          for (int p = 0; p < 6; ++p)
            for (std::size_t i = 0; i < triples.size(); ++i)
              if (triples[i].contains(pairs[p])) options[p].push_back(i);
          std::vector<std::size_t> pick;
          std::function<bool(int)> go = [&](int p) -> bool {
            if (p == 6) return true;
            for (std::size_t i : options[p]) {
              if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
              pick.push_back(i);
              if (go(p + 1)) return true;
              pick.pop_back();
            }
            return false;
          };
          if (go(0)) return true;
        }
  return false;
}

inline TripleSystem random_system(std::mt19937_64& rng, int n, int m) {
  auto all = bergek4::all_triples(n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<std::size_t>(m, all.size())));
  return TripleSystem(n, all);
}

/// Greedy insertion in random order, keeping only triples that leave the
/// system free of the pattern.
template <class IsFree>
TripleSystem random_greedy_free(std::mt19937_64& rng, int n, IsFree&& is_free) {
  auto all = bergek4::all_triples(n);
  std::shuffle(all.begin(), all.end(), rng);
  TripleSystem h(n);
  for (const Triple& t : all) {
    TripleSystem next = h.with(t);
    if (is_free(next)) h = std::move(next);
  }
  return h;
}

inline bool isomorphic_bruteforce(const TripleSystem& a, const TripleSystem& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_k_clique_free(const Graph& g, int r) {
  const int n = g.vertex_count();
  std::vector<int> pick;
  std::function<bool(int)> go = [&](int from) -> bool {
    if (static_cast<int>(pick.size()) == r) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      pick.push_back(v);
      if (go(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !go(0);
}

/// Random labelled multigraph over core {0, 1, 2} with n - 3 outer
/// vertices. Each possible loop or link is present with probability
/// `density`, so multiplicities stay at most three.
inline TraceMultigraph random_trace(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  const std::vector<Vertex> core{0, 1, 2};
  const Pair label_pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<bergek4::TraceLoop> loops;
  std::vector<bergek4::TraceLink> links;
  for (Vertex v = 3; v < n; ++v)
    for (const Pair& p : label_pairs)
      if (coin(rng)) loops.push_back({v, p});
  for (Vertex u = 3; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex l = 0; l < 3; ++l)
        if (coin(rng)) links.push_back({Pair(u, v), l});
  return TraceMultigraph(n, core, loops, links);
}

/// surplus straight from the definition.
inline int surplus_by_definition(const TraceMultigraph& t) {
  std::map<Pair, int> mu;
  for (const auto& l : t.links()) ++mu[l.ends];
  int s = static_cast<int>(t.loops().size());
  for (const auto& [e, m] : mu) s += m - 1;
  return s;
}

/// Connected components by repeated flooding over links.
inline std::vector<std::vector<Vertex>> components_by_flooding(const TraceMultigraph& t, bool surplus_only) {
  std::map<Pair, int> mu;
  for (const auto& l : t.links()) ++mu[l.ends];
  std::vector<Vertex> outer = t.outer_vertices();
  std::set<Vertex> seen;
  std::vector<std::vector<Vertex>> out;
  for (Vertex start : outer) {
    if (seen.count(start)) continue;
    std::vector<Vertex> comp{start};
    seen.insert(start);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& [e, m] : mu) {
        if (surplus_only && m < 2) continue;
        if (!e.contains(comp[i])) continue;
        const Vertex other = e.first == comp[i] ? e.second : e.first;
        if (seen.insert(other).second) comp.push_back(other);
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

}  // namespace oracle
