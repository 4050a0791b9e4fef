#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bergek4/canonical.hpp"
#include "bergek4/detect.hpp"
#include "bergek4/extremal.hpp"
#include "bergek4/json.hpp"
#include "bergek4/search.hpp"
#include "support/oracles.hpp"

using namespace bergek4;

namespace {

SearchConfig plain() {
  SearchConfig c;
  c.iso_depth = 0;
  c.bound_pruning = false;
  c.seed_construction = false;
  return c;
}

/// ex(n) by checking every subset of triples with the brute-force oracle.
int ex_by_subsets(int n, const PatternGraph& g) {
  const auto all = all_triples(n);
  const int count = static_cast<int>(all.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << count); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    std::vector<Triple> edges;
    for (int i = 0; i < count; ++i)
      if ((s >> i) & 1U) edges.push_back(all[i]);
    if (!oracle::contains_berge(TripleSystem(n, edges), g)) best = size;
  }
  return best;
}

void expect_valid_witness(const SearchResult& r, const ForbiddenSpec& spec) {
  if (const auto* h = std::get_if<TripleSystem>(&r.witness)) {
    EXPECT_EQ(static_cast<int>(h->edge_count()), r.value);
    EXPECT_EQ(h->vertex_count(), r.n);
    EXPECT_TRUE(is_spec_free(*h, spec));
  } else {
    const Graph& g = std::get<Graph>(r.witness);
    EXPECT_EQ(static_cast<int>(g.edge_count()), r.value);
    EXPECT_TRUE(oracle::is_k_clique_free(g, std::get<GraphClique>(spec).r));
  }
}

}  // namespace

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical_form(TripleSystem(5, {Triple(0, 1, 2)})), canonical_form(TripleSystem(5, {Triple(1, 3, 4)})));
  EXPECT_NE(canonical_form(TripleSystem(5, {Triple(0, 1, 2), Triple(0, 1, 3)})),
            canonical_form(TripleSystem(5, {Triple(0, 1, 2), Triple(0, 3, 4)})));
  std::mt19937_64 rng(1);
  std::vector<Vertex> p(6);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  EXPECT_EQ(canonical_form(balanced_3partite(6)), canonical_form(balanced_3partite(6).relabeled(p)));
  EXPECT_THROW(canonical_form(TripleSystem(11)), std::invalid_argument);
}

TEST(Canonical, InvariantUnderEveryRelabeling) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const TripleSystem h = oracle::random_system(rng, n, static_cast<int>(rng() % (binomial(n, 3) + 1)));
    const std::string form = canonical_form(h);
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      ASSERT_EQ(canonical_form(h.relabeled(p)), form) << serialize(h);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(canonical_form(canonical_relabel(h)), form);
  }
}

TEST(Canonical, SeparatesNonIsomorphicSystems) {
  std::mt19937_64 rng(3);
  int isomorphic = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 6);
    const TripleSystem a = oracle::random_system(rng, n, m);
    const TripleSystem b = oracle::random_system(rng, n, m);
    const bool same = oracle::isomorphic_bruteforce(a, b);
    isomorphic += same;
    ASSERT_EQ(canonical_form(a) == canonical_form(b), same) << serialize(a) << serialize(b);
  }
  EXPECT_GT(isomorphic, 20);
}

TEST(Canonical, LargerSystemsAndGraphs) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const TripleSystem h = oracle::random_system(rng, n, static_cast<int>(rng() % 25));
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(canonical_form(h), canonical_form(h.relabeled(p)));
  }
  const Graph path(5, {Pair(0, 1), Pair(1, 2), Pair(2, 3)});
  const Graph path2(5, {Pair(4, 2), Pair(2, 0), Pair(0, 3)});
  const Graph star(5, {Pair(0, 1), Pair(0, 2), Pair(0, 3)});
  EXPECT_EQ(canonical_form(path), canonical_form(path2));
  EXPECT_NE(canonical_form(path), canonical_form(star));
}

TEST(Search, BergeK4SmallValues) {
  const ForbiddenSpec spec = BergePattern{complete_graph(4)};
  const std::vector<int> expected{1, 4, 5, 8};
  for (int n = 3; n <= 6; ++n) {
    const SearchResult r = max_edges(n, spec);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.value, expected[n - 3]) << n;
    expect_valid_witness(r, spec);
  }
}

TEST(Search, BergeK3AndExpansionVariant) {
  EXPECT_EQ(max_edges(6, BergePattern{complete_graph(3)}).value, 4);
  const ForbiddenSpec minus = BergeMinusExpansion{complete_graph(4)};
  const SearchResult r = max_edges(6, minus);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.value, 8);
  expect_valid_witness(r, minus);
}

TEST(Search, GraphTuranValues) {
  EXPECT_EQ(graph_max_edges(6, 4).value, 12);
  EXPECT_EQ(graph_max_edges(5, 4).value, 8);
  EXPECT_EQ(graph_max_edges(3, 4).value, 3);
  for (int m = 3; m <= 8; ++m) {
    for (int r = 3; r <= 4; ++r) {
      const SearchResult res = graph_max_edges(m, r);
      EXPECT_TRUE(res.exhausted);
      // Turán numbers for r - 1 parts, from the balanced part sizes.
      int edges = m * (m - 1) / 2;
      for (int part = 0; part < r - 1; ++part) {
        const int size = (m + part) / (r - 1);
        edges -= size * (size - 1) / 2;
      }
      EXPECT_EQ(res.value, edges) << m << ' ' << r;
      expect_valid_witness(res, GraphClique{r});
    }
  }
}

TEST(Search, AgreesWithSubsetEnumeration) {
  for (int n = 3; n <= 5; ++n) {
    for (int k : {3, 4}) {
      EXPECT_EQ(max_edges(n, BergePattern{complete_graph(k)}).value, ex_by_subsets(n, complete_graph(k))) << n << k;
    }
  }
}

TEST(Search, PruningIsSound) {
  for (int n = 3; n <= 6; ++n) {
    for (int k : {3, 4}) {
      const ForbiddenSpec spec = BergePattern{complete_graph(k)};
      const SearchResult pruned = max_edges(n, spec);
      const SearchResult bare = max_edges(n, spec, plain());
      EXPECT_TRUE(bare.exhausted);
      EXPECT_EQ(pruned.value, bare.value) << n << ' ' << k;
      EXPECT_EQ(bare.stats.canonical_prunes, 0U);
      EXPECT_EQ(bare.stats.bound_prunes, 0U);
    }
  }
  for (int m = 3; m <= 6; ++m) { EXPECT_EQ(graph_max_edges(m, 4, plain()).value, graph_max_edges(m, 4).value); }
}

TEST(Search, ConfigVariantsAgree) {
  const ForbiddenSpec spec = BergePattern{complete_graph(4)};
  for (int depth : {0, 1, 2, 3, 5, 6}) {
    SearchConfig c;
    c.iso_depth = depth;
    EXPECT_EQ(max_edges(6, spec, c).value, 8) << depth;
  }
  SearchConfig greedy;
  greedy.order = BranchOrder::DegreeGreedy;
  EXPECT_EQ(max_edges(6, spec, greedy).value, 8);
  SearchConfig unseeded;
  unseeded.seed_construction = false;
  EXPECT_EQ(max_edges(6, spec, unseeded).value, 8);
}

TEST(Search, ValueIsIndependentOfWorkerCount) {
  const ForbiddenSpec spec = BergePattern{complete_graph(4)};
  for (int workers : {1, 2, 4}) {
    SearchConfig c;
    c.workers = workers;
    const SearchResult r = max_edges(6, spec, c);
    EXPECT_EQ(r.value, 8);
    EXPECT_TRUE(r.exhausted);
    expect_valid_witness(r, spec);
    EXPECT_EQ(graph_max_edges(7, 4, c).value, 16);
  }
}

TEST(Search, MonotoneAndSandwiched) {
  int previous = 0;
  for (int n = 3; n <= 6; ++n) {
    const int berge = max_edges(n, BergePattern{complete_graph(4)}).value;
    const int minus = max_edges(n, BergeMinusExpansion{complete_graph(4)}).value;
    EXPECT_GE(berge, previous);
    EXPECT_GE(minus, berge);
    previous = berge;
  }
}

TEST(Search, ExplicitPatterns) {
  // K4^3 - e forbidden: on five points the answer is 7 per brute force.
  const TripleSystem k43e(4, {Triple(0, 1, 2), Triple(0, 1, 3), Triple(0, 2, 3)});
  const ForbiddenSpec spec = ExplicitPatterns{{k43e}};
  const auto all = all_triples(5);
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << all.size()); ++s) {
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((s >> i) & 1U) edges.push_back(all[i]);
    if (!find_k43_minus_e(TripleSystem(5, edges))) best = std::max(best, static_cast<int>(edges.size()));
  }
  const SearchResult r = max_edges(5, spec);
  EXPECT_EQ(r.value, best);
  expect_valid_witness(r, spec);
}

TEST(Search, BudgetExhaustionReportsBestSoFar) {
  SearchConfig c;
  c.node_budget = 5;
  c.seed_construction = true;
  const SearchResult r = max_edges(7, BergePattern{complete_graph(4)}, c);
  EXPECT_FALSE(r.exhausted);
  EXPECT_GE(r.value, 12);
  expect_valid_witness(r, BergePattern{complete_graph(4)});
}

TEST(Search, RejectsOversizedInputs) {
  EXPECT_THROW(max_edges(11, BergePattern{complete_graph(4)}), std::invalid_argument);
  EXPECT_THROW(graph_max_edges(13, 4), std::invalid_argument);
  SearchConfig bad;
  bad.node_budget = 0;
  EXPECT_THROW(max_edges(5, BergePattern{complete_graph(4)}, bad), std::invalid_argument);
  bad = SearchConfig{};
  bad.iso_depth = -1;
  EXPECT_THROW(max_edges(5, BergePattern{complete_graph(4)}, bad), std::invalid_argument);
}

TEST(Certify, Outcomes) {
  const ForbiddenSpec spec = BergePattern{complete_graph(4)};
  EXPECT_EQ(certify_extremal(5, spec, 5).outcome, CertificationOutcome::Certified);
  EXPECT_EQ(certify_extremal(6, spec, 9).outcome, CertificationOutcome::NoWitness);
  EXPECT_EQ(certify_extremal(6, spec, 7).outcome, CertificationOutcome::LargerExists);
  SearchConfig tiny;
  tiny.node_budget = 1;
  tiny.seed_construction = false;
  EXPECT_EQ(certify_extremal(7, spec, 12, tiny).outcome, CertificationOutcome::Inconclusive);
}

TEST(Certify, RecordJson) {
  const Certification c = certify_extremal(6, BergePattern{complete_graph(4)}, 8);
  const nlohmann::json j = c;
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["spec"], "berge(K4)");
  EXPECT_EQ(j["value"], 8);
  EXPECT_EQ(j["exhausted"], true);
  EXPECT_EQ(j["witness"].size(), 8U);
  EXPECT_EQ(j["witness"][0].size(), 3U);
  EXPECT_TRUE(j["nodes"].is_number_unsigned());
  EXPECT_TRUE(j["config"].is_object());
  EXPECT_EQ(j["outcome"], "certified");
}
