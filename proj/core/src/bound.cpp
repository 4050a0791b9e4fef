#include "bergek4/bound.hpp"

#include <algorithm>
#include <stdexcept>

#include "bergek4/extremal.hpp"
#include "bergek4/stats.hpp"

namespace bergek4 {

BoundReport bound_report(const TripleSystem& h, const AnchoredTriangle& anchor) {
  const int n = h.vertex_count();
  for (Vertex v : {anchor.labels[0], anchor.labels[1], anchor.labels[2], anchor.x, anchor.y}) {
    if (v < 0 || v >= n) throw std::invalid_argument("anchor vertex out of range");
  }
  const auto& l = anchor.labels;
  if (l[0] == l[1] || l[1] == l[2] || l[0] == l[2]) throw std::invalid_argument("anchor labels repeat");
  for (Vertex v : {anchor.x, anchor.y}) {
    if (v == l[0] || v == l[1] || v == l[2]) throw std::invalid_argument("anchor x/y inside the base triple");
  }
  if (!h.contains(anchor.base()) || !h.contains(anchor.left()) || !h.contains(anchor.right())) {
    throw std::invalid_argument("anchor triples are not in the system");
  }

  BoundReport r;
  r.n = n;
  r.anchor = anchor;
  const std::vector<Vertex> core{l[0], l[1], l[2]};
  const TraceMultigraph g = trace(h, core);
  r.total_surplus = surplus(g);

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const Component& c : components(g)) {
    if (!c.bad) {
      r.good_surplus += c.surplus;
      continue;
    }
    r.bad_surplus += c.surplus;
    for (Vertex v : c.vertices) covered[v] = true;
    const BadComponentClass cls = classify_bad_component(g, c);
    const bool on_x = std::binary_search(c.vertices.begin(), c.vertices.end(), anchor.x);
    switch (cls.shape) {
      case BadShape::DoubleLoop:
        ++r.p;
        break;
      case BadShape::Dumbbell:
        ++r.q;
        break;
      case BadShape::TripleLoop:
        if (on_x && r.m == 0) {
          r.m = 1;
        } else {
          ++r.unclassified;
        }
        break;
      case BadShape::MStar:
        if (on_x && cls.centre == anchor.x && r.m == 0) {
          r.m = cls.m;
        } else {
          ++r.unclassified;
        }
        break;
      case BadShape::Other:
        ++r.unclassified;
        break;
    }
    r.bad_components.push_back({c, cls});
  }
  for (Vertex v : g.outer_vertices())
    if (!covered[v]) r.uncovered.push_back(v);

  const std::int64_t outer = n - 3;
  const auto u_size = static_cast<std::int64_t>(r.uncovered.size());
  r.rho = r.m == 1 ? 2 : 1;
  r.alpha = outer > 0 ? Rational(r.m + r.p + 2 * r.q, outer) : Rational(0);

  r.count_inequality_holds = r.total_surplus <= r.bad_surplus + u_size;
  r.surplus_bound_holds = r.total_surplus <= outer + r.rho + r.p + r.q;

  const std::int64_t d = n >= 1 ? diff(n) : 0;
  r.min_degree_hypothesis = std::all_of(l.begin(), l.end(), [&](Vertex v) { return degree(h, v) >= d + 1; });

  // Edges of G* inside the bad components: m - 1 in a star, one per dumbbell.
  const std::int64_t star_edges = r.m >= 1 ? r.m - 1 : 0;
  r.lower_bound_m = 3 * d - (outer + star_edges + r.rho + r.p + 2 * r.q);

  const Graph gstar = simple_reduction(g);
  std::uint64_t u_mask = 0;
  for (Vertex v : r.uncovered) u_mask |= std::uint64_t{1} << v;
  for (const Pair& e : gstar.edges()) {
    if (((u_mask >> e.first) & 1U) && ((u_mask >> e.second) & 1U)) ++r.gstar_u_edges;
  }
  r.lower_bound_holds = r.gstar_u_edges >= r.lower_bound_m;
  r.turan_rhs = Rational(u_size * u_size, 3);
  r.turan_condition_holds = Rational(r.lower_bound_m) >= r.turan_rhs;
  r.gstar_u_has_k4 = has_clique(gstar, u_mask, 4);
  return r;
}

Rational toomany(std::int64_t n, const Rational& alpha) {
  if (n < 6 || n > 10000) throw std::out_of_range("toomany: n outside [6, 10000]");
  if (alpha < 0 || alpha > 1 || alpha.denominator() > 10000) throw std::out_of_range("toomany: alpha outside [0, 1]");
  const Rational m(n - 3);
  const Rational one(1);
  return Rational(9 * diff(n)) - 3 * (one + alpha) * m - (one - alpha) * (one - alpha) * m * m - 3;
}

bool check_toomany(std::int64_t n_max) {
  for (std::int64_t n = 6; n <= n_max; ++n) {
    const Rational lo = std::min(toomany(n, Rational(0)), toomany(n, Rational(1)));
    if (lo < 0) return false;
    for (int i = 0; i <= 100; ++i) {
      if (toomany(n, Rational(i, 100)) < lo) return false;
    }
  }
  return true;
}

}  // namespace bergek4
