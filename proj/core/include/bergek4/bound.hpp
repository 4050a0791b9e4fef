#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "bergek4/detect.hpp"
#include "bergek4/trace.hpp"
#include "bergek4/triple_system.hpp"

namespace bergek4 {

using Rational = boost::rational<std::int64_t>;

struct ClassifiedComponent {
  Component component;
  BadComponentClass cls;
};

/// Surplus and edge-count bookkeeping of the trace G = G_H({1,2,3}) of an
/// anchored Berge triangle, and the inequalities that lead to the Turán
/// step. Every check is computed on the actual input and reported; none is
/// assumed.
struct BoundReport {
  int n = 0;
  AnchoredTriangle anchor;

  int total_surplus = 0;      ///< s(G)
  int bad_surplus = 0;        ///< sum of s over bad components
  int good_surplus = 0;       ///< sum of s over good components
  std::vector<ClassifiedComponent> bad_components;

  int m = 0;  ///< 1 for a triple loop on x, star size for an m-star on x, else 0
  int p = 0;  ///< double loops
  int q = 0;  ///< dumbbells
  /// Bad components outside the four shapes (or a triple loop / star away from x).
  int unclassified = 0;
  int rho = 1;
  Rational alpha{0};
  std::vector<Vertex> uncovered;  ///< U

  /// s(G) <= sum_J s(C_j) + |U|
  bool count_inequality_holds = false;
  /// s(G) <= n - 3 + rho + p + q
  bool surplus_bound_holds = false;
  /// every base vertex has degree >= diff(n) + 1
  bool min_degree_hypothesis = false;

  std::int64_t lower_bound_m = 0;  ///< M
  std::int64_t gstar_u_edges = 0;  ///< |E(G*[U])|
  bool lower_bound_holds = false;  ///< |E(G*[U])| >= M
  Rational turan_rhs{0};           ///< |U|^2 / 3
  bool turan_condition_holds = false;  ///< M >= |U|^2 / 3
  bool gstar_u_has_k4 = false;

  /// |U| = n - 3 - (m + p + 2q); holds when every bad component was classified.
  bool taxonomy_complete() const { return unclassified == 0; }
};

/// Throws std::invalid_argument if the anchor is not a Berge triangle of h.
BoundReport bound_report(const TripleSystem& h, const AnchoredTriangle& anchor);

/// 9 diff(n) - 3 (1 + alpha)(n - 3) - (1 - alpha)^2 (n - 3)^2 - 3, exact,
/// with diff taken from f directly. Requires 6 <= n <= 10000, alpha in
/// [0, 1] with denominator <= 10000.
Rational toomany(std::int64_t n, const Rational& alpha);

/// toomany(n, .) >= 0 on [0, 1] for every n in [6, n_max], by endpoint
/// evaluation (the expression is concave in alpha), cross-checked on the
/// grid alpha = i/100.
bool check_toomany(std::int64_t n_max);

}  // namespace bergek4
