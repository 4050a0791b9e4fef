#include "bergek4/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bergek4/canonical.hpp"
#include "bergek4/detect.hpp"
#include "bergek4/extremal.hpp"
#include "bergek4/mask.hpp"

namespace bergek4 {

namespace {

/// Spec-freeness over item masks of a SubsetUniverse.
class Constraint {
 public:
  virtual ~Constraint() = default;
  /// `set` contains `item`; true if some forbidden configuration uses it.
  virtual bool violates(const Mask128& set, int item) const = 0;
  virtual bool contains_forbidden(const Mask128& set) const = 0;
};

class BergeConstraint final : public Constraint {
 public:
  BergeConstraint(int n, const PatternGraph& g, DetectMode mode) : detector_(n, g, mode) {}
  bool violates(const Mask128& set, int item) const override { return detector_.contains_using(set, item); }
  bool contains_forbidden(const Mask128& set) const override { return detector_.contains(set); }

 private:
  BergeDetector detector_;
};

class ExplicitConstraint final : public Constraint {
 public:
  ExplicitConstraint(const SubsetUniverse& u, std::vector<TripleSystem> patterns) : u_(u), patterns_(std::move(patterns)) {}

  bool violates(const Mask128& set, int item) const override {
    return std::any_of(patterns_.begin(), patterns_.end(), [&](const TripleSystem& p) { return contains_copy(set, p, item); });
  }
  bool contains_forbidden(const Mask128& set) const override {
    return std::any_of(patterns_.begin(), patterns_.end(), [&](const TripleSystem& p) { return contains_copy(set, p, -1); });
  }

 private:
  /// Injective images of the pattern inside `set`; with item >= 0 the image
  /// must use that item.
  bool contains_copy(const Mask128& set, const TripleSystem& pattern, int item) const {
    const int p = pattern.vertex_count();
    const int n = u_.vertex_count();
    if (p > n) return false;
    std::vector<Vertex> image(static_cast<std::size_t>(p), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto extend = [&](auto&& self, int i) -> bool {
      if (i == p) {
        if (item < 0) return true;
        for (const Triple& t : pattern.edges())
          if (u_.index_of(image[t[0]], image[t[1]], image[t[2]]) == item) return true;
        return false;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (used[v]) continue;
        image[i] = v;
        bool ok = true;
        for (const Triple& t : pattern.edges()) {
          if (t[2] != i) continue;
          if (!set.test(u_.index_of(image[t[0]], image[t[1]], image[t[2]]))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used[v] = true;
        const bool found = self(self, i + 1);
        used[v] = false;
        if (found) return true;
      }
      return false;
    };
    return extend(extend, 0);
  }

  const SubsetUniverse& u_;
  std::vector<TripleSystem> patterns_;
};

class CliqueConstraint final : public Constraint {
 public:
  CliqueConstraint(const SubsetUniverse& u, int r) : u_(u), r_(r) {}

  bool violates(const Mask128& set, int item) const override {
    const Graph g = to_graph(set);
    const auto& e = u_.item(item);
    return has_clique(g, g.neighbours(e[0]) & g.neighbours(e[1]), r_ - 2);
  }
  bool contains_forbidden(const Mask128& set) const override {
    const Graph g = to_graph(set);
    return has_clique(g, (g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1), r_);
  }

  Graph to_graph(const Mask128& set) const {
    std::vector<Pair> edges;
    set.for_each([&](int i) { edges.emplace_back(u_.item(i)[0], u_.item(i)[1]); });
    return Graph(u_.vertex_count(), std::move(edges));
  }

 private:
  const SubsetUniverse& u_;
  int r_;
};

struct Node {
  Mask128 set;
  Mask128 candidates;
};

class Engine {
 public:
  Engine(const SubsetUniverse& u, const Constraint& c, const SearchConfig& cfg) : u_(u), c_(c), cfg_(cfg) {}

  struct Outcome {
    int value = 0;
    Mask128 witness;
    bool exhausted = true;
    SearchStats stats;
  };

  Outcome run(const Mask128* seed) {
    const auto start = std::chrono::steady_clock::now();
    if (seed != nullptr) {
      if (c_.contains_forbidden(*seed)) throw std::logic_error("seed construction violates the spec");
      best_ = seed->count();
      witness_ = *seed;
    }

    Node root;
    for (int t = 0; t < u_.size(); ++t) {
      if (!c_.violates(Mask128::bit(t), t)) root.candidates.set(t);
    }
    std::vector<Node> level{root};
    for (int depth = 0; depth < cfg_.iso_depth && !level.empty() && !stop_; ++depth) {
      level = expand_level(level, depth);
    }
    stats_.roots = level.size();

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (!stop_) {
        const std::size_t i = next.fetch_add(1);
        if (i >= level.size()) break;
        dfs(level[i].set, level[i].candidates, level[i].set.count());
      }
    };
    const int workers = std::max(1, cfg_.workers);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    Outcome out;
    out.value = best_.load();
    out.witness = witness_;
    out.exhausted = !stop_;
    out.stats = stats_snapshot();
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  std::vector<Node> expand_level(const std::vector<Node>& level, int depth) {
    struct Child {
      std::string form;
      std::size_t parent;
      int item;
    };
    std::vector<Child> children;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Node& node = level[i];
      offer(node.set, depth);
      if (cfg_.bound_pruning && depth + node.candidates.count() <= best_.load()) {
        ++bound_prunes_;
        continue;
      }
      node.candidates.for_each([&](int t) {
        if (!count_node()) return;
        Mask128 s = node.set;
        s.set(t);
        children.push_back({canonical_labeling(u_, s).form, i, t});
      });
    }
    std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.form < b.form; });

    std::vector<Node> next;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i > 0 && children[i].form == children[i - 1].form) {
        ++canonical_prunes_;
        continue;
      }
      const Node& parent = level[children[i].parent];
      Node child;
      child.set = parent.set;
      child.set.set(children[i].item);
      Mask128 rest = parent.candidates;
      rest.reset(children[i].item);
      child.candidates = filter(child.set, rest);
      next.push_back(child);
    }
    return next;
  }

  /// Items of `rest` that can join `set` on their own.
  Mask128 filter(const Mask128& set, const Mask128& rest) const {
    Mask128 out;
    rest.for_each([&](int t) {
      Mask128 s = set;
      s.set(t);
      if (!c_.violates(s, t)) out.set(t);
    });
    return out;
  }

  int pick(const Mask128& set, const Mask128& candidates) const {
    if (cfg_.order == BranchOrder::Lexicographic) return candidates.lowest();
    std::vector<int> deg(static_cast<std::size_t>(u_.vertex_count()), 0);
    set.for_each([&](int i) {
      for (int k = 0; k < u_.arity(); ++k) ++deg[u_.item(i)[k]];
    });
    int best_item = -1;
    int best_score = -1;
    candidates.for_each([&](int i) {
      int score = 0;
      for (int k = 0; k < u_.arity(); ++k) score += deg[u_.item(i)[k]];
      if (score > best_score) {
        best_score = score;
        best_item = i;
      }
    });
    return best_item;
  }

  void dfs(const Mask128& set, const Mask128& candidates, int count) {
    if (!count_node()) return;
    offer(set, count);
    if (cfg_.bound_pruning && count + candidates.count() <= best_.load(std::memory_order_relaxed)) {
      ++bound_prunes_;
      return;
    }
    if (candidates.empty()) return;
    const int t = pick(set, candidates);
    Mask128 rest = candidates;
    rest.reset(t);
    Mask128 with = set;
    with.set(t);
    dfs(with, filter(with, rest), count + 1);
    dfs(set, rest, count);
  }

  bool count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cfg_.node_budget) {
      stop_ = true;
      return false;
    }
    return !stop_;
  }

  void offer(const Mask128& set, int count) {
    int current = best_.load();
    if (count <= current) return;
    if (c_.contains_forbidden(set)) throw std::logic_error("incremental check accepted a forbidden configuration");
    std::lock_guard lock(witness_mutex_);
    current = best_.load();
    if (count > current) {
      witness_ = set;
      best_.store(count);
    }
  }

  SearchStats stats_snapshot() const {
    SearchStats s = stats_;
    s.nodes = std::min<std::uint64_t>(nodes_.load(), cfg_.node_budget);
    s.bound_prunes = bound_prunes_.load();
    s.canonical_prunes = canonical_prunes_.load();
    return s;
  }

  const SubsetUniverse& u_;
  const Constraint& c_;
  const SearchConfig& cfg_;
  std::atomic<int> best_{0};
  Mask128 witness_;
  std::mutex witness_mutex_;
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> bound_prunes_{0};
  std::atomic<std::uint64_t> canonical_prunes_{0};
  SearchStats stats_;
};

Graph turan_graph(int m, int parts) {
  std::vector<Pair> edges;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b)
      if (a % parts != b % parts) edges.emplace_back(a, b);
  return Graph(m, std::move(edges));
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.iso_depth < 0) throw std::invalid_argument("iso_depth must be >= 0");
  if (cfg.node_budget == 0) throw std::invalid_argument("node_budget must be positive");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

std::unique_ptr<Constraint> make_constraint(const SubsetUniverse& u, const ForbiddenSpec& spec) {
  const int n = u.vertex_count();
  return std::visit(
      [&](const auto& s) -> std::unique_ptr<Constraint> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BergePattern>) {
          return std::make_unique<BergeConstraint>(n, s.pattern, DetectMode::Any);
        } else if constexpr (std::is_same_v<T, BergeMinusExpansion>) {
          return std::make_unique<BergeConstraint>(n, s.pattern, DetectMode::NonExpansion);
        } else if constexpr (std::is_same_v<T, ExplicitPatterns>) {
          return std::make_unique<ExplicitConstraint>(u, s.patterns);
        } else {
          if (s.r < 2) throw std::invalid_argument("clique size must be >= 2");
          return std::make_unique<CliqueConstraint>(u, s.r);
        }
      },
      spec);
}

}  // namespace

std::string describe(const ForbiddenSpec& spec) {
  auto pattern_name = [](const PatternGraph& g) {
    const auto k = static_cast<std::size_t>(g.vertex_count());
    if (g.edge_count() == k * (k - 1) / 2) return "K" + std::to_string(k);
    return "G(" + std::to_string(k) + "," + std::to_string(g.edge_count()) + ")";
  };
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BergePattern>) {
          return "berge(" + pattern_name(s.pattern) + ")";
        } else if constexpr (std::is_same_v<T, BergeMinusExpansion>) {
          return "berge-minus-expansion(" + pattern_name(s.pattern) + ")";
        } else if constexpr (std::is_same_v<T, ExplicitPatterns>) {
          return "explicit(" + std::to_string(s.patterns.size()) + ")";
        } else {
          return "graph-clique(K" + std::to_string(s.r) + ")";
        }
      },
      spec);
}

SearchResult max_edges(int n, const ForbiddenSpec& spec, const SearchConfig& config) {
  validate_config(config);
  const bool graph_mode = std::holds_alternative<GraphClique>(spec);
  const int limit = graph_mode ? kMaxSearchGraphVertices : kMaxSearchTripleVertices;
  if (n < 0 || n > limit) {
    throw std::invalid_argument("n=" + std::to_string(n) + " outside the certified search range [0, " + std::to_string(limit) + "]");
  }
  const SubsetUniverse u(n, graph_mode ? 2 : 3);
  const auto constraint = make_constraint(u, spec);

  std::optional<Mask128> seed;
  if (config.seed_construction) {
    Mask128 s;
    if (graph_mode) {
      const int r = std::get<GraphClique>(spec).r;
      if (r >= 2) {
        const Graph turan = turan_graph(n, r - 1);
        for (const Pair& e : turan.edges()) s.set(u.index_of(e.first, e.second));
      }
    } else {
      s = u.to_mask(balanced_3partite(n));
    }
    if (!constraint->contains_forbidden(s)) seed = s;
  }

  Engine engine(u, *constraint, config);
  const auto out = engine.run(seed ? &*seed : nullptr);

  SearchResult r;
  r.n = n;
  r.value = out.value;
  r.exhausted = out.exhausted;
  r.stats = out.stats;
  const auto lab = canonical_labeling(u, out.witness);
  if (graph_mode) {
    std::vector<Pair> edges;
    out.witness.for_each([&](int i) { edges.emplace_back(lab.perm[u.item(i)[0]], lab.perm[u.item(i)[1]]); });
    r.witness = Graph(n, std::move(edges));
  } else {
    r.witness = u.to_system(out.witness).relabeled(lab.perm);
  }
  return r;
}

SearchResult graph_max_edges(int m, int r, const SearchConfig& config) { return max_edges(m, GraphClique{r}, config); }

bool is_spec_free(const TripleSystem& h, const ForbiddenSpec& spec) {
  if (std::holds_alternative<GraphClique>(spec)) throw std::invalid_argument("graph spec applied to a triple system");
  if (const auto* b = std::get_if<BergePattern>(&spec)) return is_berge_free(h, b->pattern, DetectMode::Any);
  if (const auto* b = std::get_if<BergeMinusExpansion>(&spec)) return is_berge_free(h, b->pattern, DetectMode::NonExpansion);
  const SubsetUniverse u(h.vertex_count(), 3);
  return !make_constraint(u, spec)->contains_forbidden(u.to_mask(h));
}

bool is_clique_free(const Graph& g, int r) {
  const int n = g.vertex_count();
  return !has_clique(g, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, r);
}

std::string to_string(CertificationOutcome o) {
  switch (o) {
    case CertificationOutcome::Certified:
      return "certified";
    case CertificationOutcome::NoWitness:
      return "refuted: no system with the claimed edge count";
    case CertificationOutcome::LargerExists:
      return "refuted: a larger system exists";
    case CertificationOutcome::Inconclusive:
      break;
  }
  return "inconclusive";
}

Certification certify_extremal(int n, const ForbiddenSpec& spec, int claimed, const SearchConfig& config) {
  Certification c;
  c.n = n;
  c.spec = describe(spec);
  c.claimed = claimed;
  c.config = config;
  c.result = max_edges(n, spec, config);
  const int v = c.result.value;
  if (v > claimed) {
    c.outcome = CertificationOutcome::LargerExists;
  } else if (!c.result.exhausted) {
    c.outcome = CertificationOutcome::Inconclusive;
  } else if (v == claimed) {
    c.outcome = CertificationOutcome::Certified;
  } else {
    c.outcome = CertificationOutcome::NoWitness;
  }
  return c;
}

}  // namespace bergek4
