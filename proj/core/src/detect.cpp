#include "bergek4/detect.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace bergek4 {

namespace {

void check_pattern(const PatternGraph& g) {
  if (g.vertex_count() > kMaxPatternVertices) {
    throw std::invalid_argument("pattern has more than 8 vertices");
  }
}

/// Calls fn(subset) for every k-subset of [0, n) in lexicographic order,
/// stopping early when fn returns true.
template <typename F>
bool for_each_subset(int n, int k, F&& fn) {
  std::vector<Vertex> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return false;
  while (true) {
    if (fn(s)) return true;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Augmenting-path bipartite matching from pattern edges to host triple ids.
class EdgeMatcher {
 public:
  explicit EdgeMatcher(std::size_t right_size) : owner_(right_size, -1), seen_(right_size, 0) {}

  /// cands[e] lists admissible triples for pattern edge e. `banned` triple is
  /// excluded everywhere except for pattern edge `fixed_edge`, which is
  /// pinned to it. Returns the triple of every edge.
  std::optional<std::vector<int>> solve(const std::vector<const std::vector<int>*>& cands, int fixed_edge, int banned) {
    std::fill(owner_.begin(), owner_.end(), -1);
    cands_ = &cands;
    banned_ = banned;
    const int left = static_cast<int>(cands.size());
    std::vector<int> result(static_cast<std::size_t>(left), -1);
    if (fixed_edge >= 0) owner_[static_cast<std::size_t>(banned)] = fixed_edge;
    for (int e = 0; e < left; ++e) {
      if (e == fixed_edge) continue;
      ++stamp_;
      if (!augment(e)) return std::nullopt;
    }
    for (std::size_t t = 0; t < owner_.size(); ++t) {
      if (owner_[t] >= 0) result[static_cast<std::size_t>(owner_[t])] = static_cast<int>(t);
    }
    return result;
  }

 private:
  bool augment(int e) {
    for (int t : *(*cands_)[static_cast<std::size_t>(e)]) {
      const auto ti = static_cast<std::size_t>(t);
      if (t == banned_ || seen_[ti] == stamp_) continue;
      seen_[ti] = stamp_;
      if (owner_[ti] < 0 || augment(owner_[ti])) {
        owner_[ti] = e;
        return true;
      }
    }
    return false;
  }

  std::vector<int> owner_;
  std::vector<int> seen_;
  int stamp_ = 0;
  int banned_ = -1;
  const std::vector<const std::vector<int>*>* cands_ = nullptr;
};

BergeEmbedding make_embedding(const TripleSystem& h, const PatternGraph& g, const std::vector<Vertex>& core,
                              const std::vector<int>& triples) {
  BergeEmbedding emb;
  emb.core = core;
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    emb.assignment.emplace_back(edges[e], h.edges()[static_cast<std::size_t>(triples[e])]);
  }
  return emb;
}

/// Backtracking over all perfect matchings, fewest candidates first. Stops
/// at the first matching that uses `required` (if >= 0) and is not an
/// expansion.
class NonExpansionEnumerator {
 public:
  NonExpansionEnumerator(const TripleSystem& h, const PatternGraph& g) : h_(h), g_(g) {}

  std::optional<BergeEmbedding> run(const std::vector<Vertex>& core, const std::vector<const std::vector<int>*>& cands,
                                    int required) {
    core_ = &core;
    cands_ = &cands;
    required_ = required;
    order_.resize(cands.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return cands[static_cast<std::size_t>(a)]->size() < cands[static_cast<std::size_t>(b)]->size(); });
    chosen_.assign(cands.size(), -1);
    used_.clear();
    found_.reset();
    descend(0);
    return found_;
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) {
      if (required_ >= 0 && !used_.contains(required_)) return false;
      BergeEmbedding emb = make_embedding(h_, g_, *core_, chosen_);
      if (is_expansion(emb)) return false;
      found_ = std::move(emb);
      return true;
    }
    const int e = order_[depth];
    for (int t : *(*cands_)[static_cast<std::size_t>(e)]) {
      if (used_.contains(t)) continue;
      used_.insert(t);
      chosen_[static_cast<std::size_t>(e)] = t;
      if (descend(depth + 1)) return true;
      used_.erase(t);
    }
    chosen_[static_cast<std::size_t>(e)] = -1;
    return false;
  }

  const TripleSystem& h_;
  const PatternGraph& g_;
  const std::vector<Vertex>* core_ = nullptr;
  const std::vector<const std::vector<int>*>* cands_ = nullptr;
  int required_ = -1;
  std::vector<int> order_;
  std::vector<int> chosen_;
  std::set<int> used_;
  std::optional<BergeEmbedding> found_;
};

}  // namespace

std::vector<std::vector<int>> placement_orderings(const PatternGraph& g) {
  check_pattern(g);
  const int k = g.vertex_count();
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> automorphisms;
  do {
    bool ok = true;
    for (const Pair& e : g.edges()) {
      if (!g.adjacent(sigma[e.first], sigma[e.second])) {
        ok = false;
        break;
      }
    }
    if (ok) automorphisms.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::set<std::vector<int>> reps;
  std::vector<int> pi(static_cast<std::size_t>(k));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::vector<int> best;
    for (const auto& s : automorphisms) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) c[i] = pi[s[i]];
      if (best.empty() || c < best) best = std::move(c);
    }
    reps.insert(std::move(best));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return {reps.begin(), reps.end()};
}

std::optional<BergeEmbedding> find_berge(const TripleSystem& h, const PatternGraph& g, DetectMode mode,
                                         std::optional<Triple> must_use) {
  check_pattern(g);
  const int n = h.vertex_count();
  const int k = g.vertex_count();
  const auto pattern_edges = g.edges();
  const std::size_t edge_count = pattern_edges.size();
  if (k > n || edge_count > h.edge_count()) return std::nullopt;

  int required = -1;
  if (must_use) {
    const auto it = std::lower_bound(h.edges().begin(), h.edges().end(), *must_use);
    if (it == h.edges().end() || *it != *must_use) return std::nullopt;
    required = static_cast<int>(it - h.edges().begin());
  }
  const bool expansion_possible = n >= k + static_cast<int>(edge_count);
  const bool enumerate = mode == DetectMode::NonExpansion && expansion_possible;

  std::vector<std::vector<int>> by_pair(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Triple& t = h.edges()[i];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) by_pair[static_cast<std::size_t>(t[a] * n + t[b])].push_back(static_cast<int>(i));
  }

  const auto orderings = placement_orderings(g);
  EdgeMatcher matcher(h.edge_count());
  NonExpansionEnumerator enumerator(h, g);
  std::vector<Vertex> core(static_cast<std::size_t>(k));
  std::vector<const std::vector<int>*> cands(edge_count);
  std::optional<BergeEmbedding> result;

  for_each_subset(n, k, [&](const std::vector<Vertex>& subset) {
    for (const auto& pi : orderings) {
      for (int i = 0; i < k; ++i) core[i] = subset[pi[i]];
      bool viable = true;
      std::vector<int> forced;
      for (std::size_t e = 0; e < edge_count; ++e) {
        const Vertex u = std::min(core[pattern_edges[e].first], core[pattern_edges[e].second]);
        const Vertex v = std::max(core[pattern_edges[e].first], core[pattern_edges[e].second]);
        cands[e] = &by_pair[static_cast<std::size_t>(u * n + v)];
        if (cands[e]->empty()) {
          viable = false;
          break;
        }
        if (required >= 0 && must_use->contains(Pair(u, v))) forced.push_back(static_cast<int>(e));
      }
      if (!viable || (required >= 0 && forced.empty())) continue;

      if (enumerate) {
        result = enumerator.run(core, cands, required);
        if (result) return true;
        continue;
      }
      if (required < 0) {
        auto m = matcher.solve(cands, -1, -1);
        if (m) {
          result = make_embedding(h, g, core, *m);
          return true;
        }
        continue;
      }
      for (int e : forced) {
        auto m = matcher.solve(cands, e, required);
        if (m) {
          result = make_embedding(h, g, core, *m);
          return true;
        }
      }
    }
    return false;
  });
  return result;
}

bool is_berge_free(const TripleSystem& h, const PatternGraph& g, DetectMode mode) {
  return !find_berge(h, g, mode).has_value();
}

bool verify_embedding(const TripleSystem& h, const PatternGraph& g, const BergeEmbedding& emb) {
  if (static_cast<int>(emb.core.size()) != g.vertex_count()) return false;
  std::set<Vertex> core_set(emb.core.begin(), emb.core.end());
  if (core_set.size() != emb.core.size()) return false;
  for (Vertex v : emb.core) {
    if (v < 0 || v >= h.vertex_count()) return false;
  }
  const auto edges = g.edges();
  if (emb.assignment.size() != edges.size()) return false;
  std::set<Triple> used;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [pair, triple] = emb.assignment[e];
    if (pair != edges[e]) return false;
    if (!h.contains(triple) || !used.insert(triple).second) return false;
    if (!triple.contains(emb.core[pair.first]) || !triple.contains(emb.core[pair.second])) return false;
  }
  return true;
}

bool is_expansion(const BergeEmbedding& emb) {
  std::set<Vertex> core_set(emb.core.begin(), emb.core.end());
  std::set<Vertex> privates;
  for (const auto& [pair, triple] : emb.assignment) {
    const Vertex v = triple.third(Pair(emb.core[pair.first], emb.core[pair.second]));
    if (v < 0 || core_set.contains(v) || !privates.insert(v).second) return false;
  }
  return true;
}

TripleSystem expansion_of(const PatternGraph& g) {
  const int k = g.vertex_count();
  std::vector<Triple> edges;
  int next = k;
  for (const Pair& e : g.edges()) edges.emplace_back(e.first, e.second, next++);
  return TripleSystem(next, std::move(edges));
}

std::optional<K43MinusE> find_k43_minus_e(const TripleSystem& h) {
  std::optional<K43MinusE> out;
  for_each_subset(h.vertex_count(), 4, [&](const std::vector<Vertex>& s) {
    K43MinusE found{{s[0], s[1], s[2], s[3]}, {}};
    int count = 0;
    for (int skip = 3; skip >= 0 && count < 3; --skip) {
      std::array<Vertex, 3> rest{};
      int j = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) rest[j++] = s[i];
      const Triple t(rest[0], rest[1], rest[2]);
      if (h.contains(t)) found.triples[count++] = t;
    }
    if (count < 3) return false;
    out = found;
    return true;
  });
  return out;
}

std::optional<std::array<Vertex, 5>> find_tight_path(const TripleSystem& h) {
  const auto edges = h.edges();
  for (const Triple& first : edges) {
    for (int ai = 0; ai < 3; ++ai) {
      const Vertex a = first[ai];
      std::array<Vertex, 2> bc{};
      int j = 0;
      for (int i = 0; i < 3; ++i)
        if (i != ai) bc[j++] = first[i];
      for (int swap = 0; swap < 2; ++swap) {
        const Vertex b = bc[swap];
        const Vertex c = bc[1 - swap];
        for (const Triple& second : edges) {
          if (second == first || !second.contains(Pair(b, c))) continue;
          const Vertex d = second.third(Pair(b, c));
          for (const Triple& third : edges) {
            if (!third.contains(Pair(c, d))) continue;
            const Vertex e = third.third(Pair(c, d));
            if (e != a && e != b) return std::array<Vertex, 5>{a, b, c, d, e};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AnchoredTriangle> find_berge_triangle_anchored(const TripleSystem& h) {
  const auto edges = h.edges();
  for (int want_equal = 1; want_equal >= 0; --want_equal) {
    for (const Triple& base : edges) {
      for (int mid = 0; mid < 3; ++mid) {
        const Vertex l2 = base[mid];
        const Vertex l1 = base[mid == 0 ? 1 : 0];
        const Vertex l3 = base[mid == 2 ? 1 : 2];
        for (const Triple& left : edges) {
          if (left == base || !left.contains(Pair(l1, l2))) continue;
          const Vertex x = left.third(Pair(l1, l2));
          for (const Triple& right : edges) {
            if (right == base || !right.contains(Pair(l2, l3))) continue;
            const Vertex y = right.third(Pair(l2, l3));
            if ((x == y) == static_cast<bool>(want_equal)) return AnchoredTriangle{{l1, l2, l3}, x, y};
          }
        }
      }
    }
  }
  return std::nullopt;
}

BergeDetector::BergeDetector(int n, const PatternGraph& g, DetectMode mode)
    : universe_(n, 3),
      pattern_(g),
      mode_(mode),
      expansion_possible_(n >= g.vertex_count() + static_cast<int>(g.edge_count())) {
  check_pattern(g);
  if (g.edge_count() > 28) throw std::invalid_argument("pattern has too many edges");
  by_item_.resize(static_cast<std::size_t>(universe_.size()));
  const auto orderings = placement_orderings(g);
  for_each_subset(n, g.vertex_count(), [&](const std::vector<Vertex>& subset) {
    for (const auto& pi : orderings) {
      Placement p;
      for (const Pair& e : g.edges()) p.pairs.push_back({subset[pi[e.first]], subset[pi[e.second]]});
      const int idx = static_cast<int>(placements_.size());
      for (std::size_t e = 0; e < p.pairs.size(); ++e) {
        universe_.containing(p.pairs[e][0], p.pairs[e][1]).for_each([&](int item) {
          by_item_[static_cast<std::size_t>(item)].emplace_back(idx, static_cast<int>(e));
        });
      }
      placements_.push_back(std::move(p));
    }
    return false;
  });
}

bool BergeDetector::match(const Placement& p, const Mask128& system, int forced_edge, int forced_item) const {
  const int left = static_cast<int>(p.pairs.size());
  std::array<Mask128, 28> cand{};
  Mask128 all;
  for (int e = 0; e < left; ++e) {
    if (e == forced_edge) continue;
    cand[e] = system & universe_.containing(p.pairs[e][0], p.pairs[e][1]);
    if (forced_item >= 0) cand[e].reset(forced_item);
    if (cand[e].empty()) return false;
    all |= cand[e];
  }
  if (all.count() < left - (forced_edge >= 0 ? 1 : 0)) return false;

  std::array<std::int8_t, Mask128::kBits> owner;
  owner.fill(-1);
  Mask128 visited;
  auto augment = [&](auto&& self, int e) -> bool {
    Mask128 avail = cand[e] & ~visited;
    while (!avail.empty()) {
      const int t = avail.lowest();
      avail.reset(t);
      visited.set(t);
      if (owner[t] < 0 || self(self, owner[t])) {
        owner[t] = static_cast<std::int8_t>(e);
        return true;
      }
    }
    return false;
  };
  for (int e = 0; e < left; ++e) {
    if (e == forced_edge) continue;
    visited = Mask128{};
    if (!augment(augment, e)) return false;
  }
  return true;
}

bool BergeDetector::fallback(const Mask128& system, std::optional<int> item) const {
  const TripleSystem h = universe_.to_system(system);
  std::optional<Triple> must_use;
  if (item) {
    const auto& v = universe_.item(*item);
    must_use = Triple(v[0], v[1], v[2]);
  }
  return find_berge(h, pattern_, mode_, must_use).has_value();
}

bool BergeDetector::contains(const Mask128& system) const {
  if (mode_ == DetectMode::NonExpansion && expansion_possible_) return fallback(system, std::nullopt);
  if (system.count() < static_cast<int>(pattern_.edge_count())) return false;
  for (const Placement& p : placements_) {
    if (match(p, system, -1, -1)) return true;
  }
  return false;
}

bool BergeDetector::contains_using(const Mask128& system, int item) const {
  if (!system.test(item)) return false;
  if (mode_ == DetectMode::NonExpansion && expansion_possible_) return fallback(system, item);
  if (system.count() < static_cast<int>(pattern_.edge_count())) return false;
  for (const auto& [placement, edge] : by_item_[static_cast<std::size_t>(item)]) {
    if (match(placements_[static_cast<std::size_t>(placement)], system, edge, item)) return true;
  }
  return false;
}

}  // namespace bergek4
