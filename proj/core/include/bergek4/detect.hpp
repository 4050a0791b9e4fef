#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bergek4/graph.hpp"
#include "bergek4/mask.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Witness that a triple system contains a Berge copy of a pattern graph.
struct BergeEmbedding {
  /// core[i] is the host vertex playing pattern vertex i.
  std::vector<Vertex> core;
  /// One entry per pattern edge, in the pattern's edge order.
  std::vector<std::pair<Pair, Triple>> assignment;

  friend bool operator==(const BergeEmbedding&, const BergeEmbedding&) = default;
};

enum class DetectMode {
  Any,
  /// Only embeddings that are not the expansion of the pattern count. With
  /// fewer than k + |E(g)| vertices no expansion fits, so this matches Any.
  NonExpansion,
};

/// Largest pattern handled by the detectors.
inline constexpr int kMaxPatternVertices = 8;

/// Searches for a Berge copy of g in h. With `must_use`, only embeddings
/// that assign some pattern edge to that triple are considered.
std::optional<BergeEmbedding> find_berge(const TripleSystem& h, const PatternGraph& g,
                                         DetectMode mode = DetectMode::Any,
                                         std::optional<Triple> must_use = std::nullopt);

bool is_berge_free(const TripleSystem& h, const PatternGraph& g, DetectMode mode = DetectMode::Any);

/// Checks injectivity of the core, membership and distinctness of the
/// assigned triples, and that every pattern edge lies inside its triple.
bool verify_embedding(const TripleSystem& h, const PatternGraph& g, const BergeEmbedding& emb);

/// True if every assigned triple is its pattern edge plus a private vertex
/// outside the core, all private vertices distinct.
bool is_expansion(const BergeEmbedding& emb);

/// Every pattern edge {u, v} becomes {u, v, k + i} for the i-th edge.
TripleSystem expansion_of(const PatternGraph& g);

struct K43MinusE {
  std::array<Vertex, 4> vertices;
  std::array<Triple, 3> triples;
};

/// A 4-set spanning at least three triples.
std::optional<K43MinusE> find_k43_minus_e(const TripleSystem& h);

/// Distinct a, b, c, d, e with abc, bcd, cde all present.
std::optional<std::array<Vertex, 5>> find_tight_path(const TripleSystem& h);

/// Berge triangle {l1 l2 l3, l1 l2 x, l2 l3 y} with x, y outside the base.
struct AnchoredTriangle {
  std::array<Vertex, 3> labels;
  Vertex x = -1;
  Vertex y = -1;

  Triple base() const { return Triple(labels[0], labels[1], labels[2]); }
  Triple left() const { return Triple(labels[0], labels[1], x); }
  Triple right() const { return Triple(labels[1], labels[2], y); }
};

/// Prefers x == y (a K4^3 - e around the base); falls back to x != y.
std::optional<AnchoredTriangle> find_berge_triangle_anchored(const TripleSystem& h);

/// Orderings of pattern vertices up to automorphisms of the pattern: one
/// permutation per left coset of Aut(g) in Sym(k).
std::vector<std::vector<int>> placement_orderings(const PatternGraph& g);

/// Berge containment over masks of the triple universe on n <= 10 points.
/// This is the incremental hook used by the extremal search.
class BergeDetector {
 public:
  BergeDetector(int n, const PatternGraph& g, DetectMode mode);

  const SubsetUniverse& universe() const { return universe_; }
  bool contains(const Mask128& system) const;
  /// Only embeddings in which some pattern edge is assigned `item`, which
  /// must be present in `system`.
  bool contains_using(const Mask128& system, int item) const;

 private:
  struct Placement {
    std::vector<std::array<Vertex, 2>> pairs;
  };

  bool match(const Placement& p, const Mask128& system, int forced_edge, int forced_item) const;
  bool fallback(const Mask128& system, std::optional<int> item) const;

  SubsetUniverse universe_;
  PatternGraph pattern_;
  DetectMode mode_;
  bool expansion_possible_;
  std::vector<Placement> placements_;
  /// For each item: (placement, pattern edge) pairs whose host pair lies in it.
  std::vector<std::vector<std::pair<int, int>>> by_item_;
};

}  // namespace bergek4
