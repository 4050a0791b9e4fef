#pragma once

#include "bergek4/graph.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

// All of these throw std::out_of_range for vertices outside [0, n).

int degree(const TripleSystem& h, Vertex v);
/// 0 for a system without vertices.
int min_degree(const TripleSystem& h);
int max_degree(const TripleSystem& h);

int codegree(const TripleSystem& h, Pair p);

/// Graph of the pairs no triple covers.
Graph uncovered_graph(const TripleSystem& h);

}  // namespace bergek4
