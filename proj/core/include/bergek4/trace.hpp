#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "bergek4/graph.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Loop at an outer vertex, from a triple {label.first, label.second, v}.
struct TraceLoop {
  Vertex v;
  Pair label;
  friend auto operator<=>(const TraceLoop&, const TraceLoop&) = default;
};

/// Edge between outer vertices, from a triple {label, ends.first, ends.second}.
struct TraceLink {
  Pair ends;
  Vertex label;
  friend auto operator<=>(const TraceLink&, const TraceLink&) = default;
};

/// Labelled multigraph G_H(A) on V(H) \ A. Loops come from triples meeting
/// the core A in two vertices, links from triples meeting it in one.
/// Vertices keep their host ids; core vertices are simply absent.
class TraceMultigraph {
 public:
  /// Validates labels against the core and rejects repeated (edge, label)
  /// entries. Throws std::invalid_argument.
  TraceMultigraph(int n, std::vector<Vertex> core, std::vector<TraceLoop> loops, std::vector<TraceLink> links);

  int host_vertex_count() const { return n_; }
  const std::vector<Vertex>& core() const { return core_; }
  std::vector<Vertex> outer_vertices() const;
  bool is_outer(Vertex v) const;
  std::span<const TraceLoop> loops() const { return loops_; }
  std::span<const TraceLink> links() const { return links_; }
  /// Loops plus links, counted with multiplicity.
  std::size_t size() const { return loops_.size() + links_.size(); }

  int loop_multiplicity(Vertex v) const;
  int link_multiplicity(Pair e) const;
  /// Bitmask over core positions (bit i <-> core()[i]).
  unsigned core_bit(Vertex a) const;
  /// Host triple that produced a loop or link.
  Triple source(const TraceLoop& l) const { return Triple(l.label.first, l.label.second, l.v); }
  Triple source(const TraceLink& l) const { return Triple(l.label, l.ends.first, l.ends.second); }

 private:
  int n_;
  std::vector<Vertex> core_;
  std::vector<TraceLoop> loops_;
  std::vector<TraceLink> links_;
};

/// Throws std::invalid_argument unless the core is a proper nonempty subset
/// of [0, n).
TraceMultigraph trace(const TripleSystem& h, std::span<const Vertex> core);

/// sum of loop multiplicities plus sum of (mu(e) - 1) over links.
int surplus(const TraceMultigraph& t);
/// Surplus of the sub-multigraph induced on `vertices`.
int surplus(const TraceMultigraph& t, std::span<const Vertex> vertices);

/// Loops removed and parallel links merged; graph on all n host vertices.
Graph simple_reduction(const TraceMultigraph& t);

/// Only the loops and the links of multiplicity >= 2.
TraceMultigraph surplus_subgraph(const TraceMultigraph& t);

struct Component {
  std::vector<Vertex> vertices;
  int surplus = 0;
  /// surplus > |vertices|
  bool bad = false;
};

/// Connected components over the outer vertices. Loops never connect and
/// parallel links connect once.
std::vector<Component> components(const TraceMultigraph& t);
/// Components of the surplus subgraph.
std::vector<Component> blocks(const TraceMultigraph& t);

enum class BadShape { TripleLoop, MStar, DoubleLoop, Dumbbell, Other };

struct BadComponentClass {
  BadShape shape = BadShape::Other;
  /// Star size for MStar (vertex count), else 0.
  int m = 0;
  /// Star centre / loop vertex when applicable, else -1.
  Vertex centre = -1;
};

std::string to_string(BadShape s);

/// Shape test only; the position of the component relative to the anchor
/// is the caller's business. Returns Other for good components.
BadComponentClass classify_bad_component(const TraceMultigraph& t, const Component& c);

/// Z = outer vertices minus {x, y}, split by the union of the labels on the
/// loops and links at each vertex. Index = bitmask over core positions.
using ZPartition = std::array<std::vector<Vertex>, 8>;
/// Throws std::invalid_argument unless the core has exactly three vertices.
ZPartition z_partition(const TraceMultigraph& t, Vertex x, Vertex y);

/// Three distinct trace edges at z whose labels admit distinct
/// representatives, as the host triples they came from.
struct SdrViolation {
  Vertex z;
  std::array<Triple, 3> edges;
};
std::vector<SdrViolation> check_no_sdr(const TraceMultigraph& t, Vertex x, Vertex y);

struct MultiplicityViolation {
  /// Which of the four structural properties failed (1..4).
  int property;
  std::vector<Vertex> vertices;
  std::string detail;
};
/// 1: loop and link multiplicities inside Z are at most two.
/// 2: a double loop in Z sits on an otherwise isolated vertex of Z_123.
/// 3: a multiple link inside Z has both ends in the same Z_ij.
/// 4: for double links v1v2, v2v3 inside one Z_ij, v1 and v3 carry nothing else.
std::vector<MultiplicityViolation> check_multiplicity_props(const TraceMultigraph& t, Vertex x, Vertex y);

/// Every bad component contains a bad block.
bool check_bad_components_have_bad_block(const TraceMultigraph& t);

}  // namespace bergek4
