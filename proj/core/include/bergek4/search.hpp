#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bergek4/graph.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Forbid every Berge copy of the pattern.
struct BergePattern {
  PatternGraph pattern;
};
/// Forbid every Berge copy of the pattern except its expansion.
struct BergeMinusExpansion {
  PatternGraph pattern;
};
/// Forbid subsystems isomorphic to any of the given triple systems.
struct ExplicitPatterns {
  std::vector<TripleSystem> patterns;
};
/// Simple graphs without K_r.
struct GraphClique {
  int r = 4;
};

using ForbiddenSpec = std::variant<BergePattern, BergeMinusExpansion, ExplicitPatterns, GraphClique>;

/// Short name for reports, e.g. "berge(K4)".
std::string describe(const ForbiddenSpec& spec);

enum class BranchOrder {
  Lexicographic,
  /// Next item maximises the summed degree of its vertices in the current set.
  DegreeGreedy,
};

struct SearchConfig {
  /// Systems with up to this many edges are deduplicated up to isomorphism.
  int iso_depth = 4;
  int workers = 1;
  std::uint64_t node_budget = 4'000'000'000ULL;
  /// Start from the balanced 3-partite system (Turán graph for GraphClique)
  /// when it satisfies the spec.
  bool seed_construction = true;
  bool bound_pruning = true;
  BranchOrder order = BranchOrder::Lexicographic;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t canonical_prunes = 0;
  std::uint64_t roots = 0;
  double seconds = 0.0;
};

using Witness = std::variant<TripleSystem, Graph>;

struct SearchResult {
  int n = 0;
  int value = 0;
  /// Spec-free with exactly `value` edges, canonically relabelled.
  Witness witness;
  /// True when the search space was covered, so `value` is the extremal number.
  bool exhausted = false;
  SearchStats stats;
};

/// Largest vertex counts the search accepts.
inline constexpr int kMaxSearchTripleVertices = 10;
inline constexpr int kMaxSearchGraphVertices = 12;

/// Exact ex(n, spec) by branch and bound. Throws std::invalid_argument when
/// n exceeds the search limits.
SearchResult max_edges(int n, const ForbiddenSpec& spec, const SearchConfig& config = {});

/// Largest K_r-free simple graph on m vertices.
SearchResult graph_max_edges(int m, int r, const SearchConfig& config = {});

/// Full (non-incremental) spec check for a triple system.
bool is_spec_free(const TripleSystem& h, const ForbiddenSpec& spec);
bool is_clique_free(const Graph& g, int r);

enum class CertificationOutcome {
  Certified,
  /// No spec-free system with the claimed number of edges exists.
  NoWitness,
  /// A spec-free system with more edges than claimed exists.
  LargerExists,
  /// Budget ran out before the claim could be settled.
  Inconclusive,
};

std::string to_string(CertificationOutcome o);

struct Certification {
  int n = 0;
  std::string spec;
  int claimed = 0;
  CertificationOutcome outcome = CertificationOutcome::Inconclusive;
  SearchResult result;
  SearchConfig config;
};

Certification certify_extremal(int n, const ForbiddenSpec& spec, int claimed, const SearchConfig& config = {});

}  // namespace bergek4
