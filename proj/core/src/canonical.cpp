#include "bergek4/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bergek4 {

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const SubsetUniverse& u, const Mask128& edges) : u_(u), edges_(edges), n_(u.vertex_count()) {
    compute_cells();
    labels_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  CanonicalLabeling run() {
    search(0, true);
    CanonicalLabeling out;
    out.perm.assign(static_cast<std::size_t>(n_), -1);
    for (int p = 0; p < n_; ++p) out.perm[static_cast<std::size_t>(best_labels_[p])] = p;
    out.form.push_back(static_cast<char>(n_));
    out.form.push_back(static_cast<char>(u_.arity()));
    for (std::size_t i = 0; i < best_.size(); i += 8) {
      unsigned char byte = 0;
      for (std::size_t j = i; j < std::min(i + 8, best_.size()); ++j) byte = static_cast<unsigned char>((byte << 1) | best_[j]);
      out.form.push_back(static_cast<char>(byte));
    }
    return out;
  }

 private:
  bool present(Vertex a, Vertex b) const { return edges_.test(u_.index_of(a, b)); }
  bool present(Vertex a, Vertex b, Vertex c) const { return edges_.test(u_.index_of(a, b, c)); }

  void compute_cells() {
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n_));
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) deg[v] = (edges_ & u_.containing(v)).count();
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<int> profile;
      for (Vertex w = 0; w < n_; ++w) {
        if (w == v) continue;
        if (u_.arity() == 3) {
          profile.push_back((edges_ & u_.containing(v, w)).count());
        } else if (present(std::min(v, w), std::max(v, w))) {
          profile.push_back(deg[w]);
        }
      }
      std::sort(profile.begin(), profile.end());
      key[v].push_back(deg[v]);
      key[v].insert(key[v].end(), profile.begin(), profile.end());
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    cell_of_position_.assign(static_cast<std::size_t>(n_), 0);
    cell_of_vertex_.assign(static_cast<std::size_t>(n_), 0);
    isolated_.assign(static_cast<std::size_t>(n_), false);
    int cell = 0;
    for (int p = 0; p < n_; ++p) {
      if (p > 0 && key[order[p]] != key[order[p - 1]]) ++cell;
      cell_of_position_[p] = cell;
      cell_of_vertex_[order[p]] = cell;
      isolated_[order[p]] = deg[order[p]] == 0;
    }
  }

  void segment(int p, Vertex v, std::vector<std::uint8_t>& out) const {
    out.clear();
    if (u_.arity() == 2) {
      for (int a = 0; a < p; ++a) {
        const Vertex x = labels_[a];
        out.push_back(present(std::min(x, v), std::max(x, v)) ? 1 : 0);
      }
      return;
    }
    for (int b = 1; b < p; ++b) {
      for (int a = 0; a < b; ++a) {
        std::array<Vertex, 3> t{labels_[a], labels_[b], v};
        std::sort(t.begin(), t.end());
        out.push_back(present(t[0], t[1], t[2]) ? 1 : 0);
      }
    }
  }

  /// `tight`: current prefix equals the best prefix (or no best yet).
  /// Returns true if the best form was replaced inside this subtree.
  bool search(int p, bool tight) {
    if (p == n_) {
      if (have_best_ && tight) return false;
      best_ = current_;
      best_labels_ = labels_;
      have_best_ = true;
      return true;
    }
    bool updated = false;
    bool took_isolated = false;
    std::vector<std::uint8_t> seg;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || cell_of_vertex_[v] != cell_of_position_[p]) continue;
      // Isolated vertices are interchangeable.
      if (isolated_[v]) {
        if (took_isolated) continue;
        took_isolated = true;
      }
      segment(p, v, seg);
      const std::size_t offset = current_.size();
      bool child_tight = tight && have_best_;
      if (child_tight) {
        const auto cmp = std::lexicographical_compare_three_way(seg.begin(), seg.end(), best_.begin() + static_cast<std::ptrdiff_t>(offset),
                                                                best_.begin() + static_cast<std::ptrdiff_t>(offset + seg.size()));
        if (cmp > 0) continue;
        child_tight = cmp == 0;
      }
      current_.insert(current_.end(), seg.begin(), seg.end());
      labels_[p] = v;
      used_[v] = true;
      if (search(p + 1, child_tight)) {
        updated = true;
        tight = true;
      }
      used_[v] = false;
      labels_[p] = -1;
      current_.resize(offset);
    }
    return updated;
  }

  const SubsetUniverse& u_;
  Mask128 edges_;
  int n_;
  std::vector<int> cell_of_position_;
  std::vector<int> cell_of_vertex_;
  std::vector<bool> isolated_;
  std::vector<Vertex> labels_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  std::vector<Vertex> best_labels_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SubsetUniverse& universe, const Mask128& edges) {
  return Canonicalizer(universe, edges).run();
}

std::string canonical_form(const TripleSystem& h) {
  if (h.vertex_count() > kMaxCanonicalVertices) throw std::invalid_argument("canonical_form: n > 10");
  const SubsetUniverse u(h.vertex_count(), 3);
  return canonical_labeling(u, u.to_mask(h)).form;
}

std::string canonical_form(const Graph& g) {
  if (g.vertex_count() > 12) throw std::invalid_argument("canonical_form: n > 12");
  const SubsetUniverse u(g.vertex_count(), 2);
  Mask128 m;
  for (const Pair& p : g.edges()) m.set(u.index_of(p.first, p.second));
  return canonical_labeling(u, m).form;
}

TripleSystem canonical_relabel(const TripleSystem& h) {
  if (h.vertex_count() > kMaxCanonicalVertices) throw std::invalid_argument("canonical_relabel: n > 10");
  const SubsetUniverse u(h.vertex_count(), 3);
  const auto lab = canonical_labeling(u, u.to_mask(h));
  return h.relabeled(lab.perm);
}

}  // namespace bergek4
