#pragma once

#include <string>
#include <vector>

#include "bergek4/graph.hpp"
#include "bergek4/mask.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Largest vertex count accepted by canonical_form for triple systems.
inline constexpr int kMaxCanonicalVertices = 10;

struct CanonicalLabeling {
  /// perm[v] is the canonical label of vertex v.
  std::vector<Vertex> perm;
  /// Byte string equal for two inputs iff they are isomorphic.
  std::string form;
};

/// Lexicographically minimal edge bitstring (subsets in colex order) over
/// all relabelings that sort vertices by a degree/codegree invariant.
CanonicalLabeling canonical_labeling(const SubsetUniverse& universe, const Mask128& edges);

/// Throws std::invalid_argument for n > 10.
std::string canonical_form(const TripleSystem& h);
/// Throws std::invalid_argument for n > 12.
std::string canonical_form(const Graph& g);

/// h relabeled by its canonical labeling.
TripleSystem canonical_relabel(const TripleSystem& h);

}  // namespace bergek4
