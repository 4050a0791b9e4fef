#include "bergek4/mask.hpp"

#include <stdexcept>
#include <string>

namespace bergek4 {

SubsetUniverse::SubsetUniverse(int n, int arity) : n_(n), arity_(arity) {
  if (arity != 2 && arity != 3) throw std::invalid_argument("universe arity must be 2 or 3");
  if (n < 0 || binomial(n, arity) > Mask128::kBits) {
    throw std::invalid_argument("universe too large for n=" + std::to_string(n));
  }
  const auto sn = static_cast<std::size_t>(n);
  pair_index_.assign(sn * sn, -1);
  pair_cover_.assign(sn * sn, Mask128{});
  vertex_cover_.assign(sn, Mask128{});
  if (arity == 3) triple_index_.assign(sn * sn * sn, -1);

  auto add = [&](std::array<Vertex, 3> item) {
    const int idx = static_cast<int>(items_.size());
    items_.push_back(item);
    const int k = arity_;
    for (int i = 0; i < k; ++i) {
      vertex_cover_[item[i]].set(idx);
      for (int j = i + 1; j < k; ++j) {
        pair_cover_[item[i] * n_ + item[j]].set(idx);
        pair_cover_[item[j] * n_ + item[i]].set(idx);
      }
    }
  };

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (arity == 2) {
        pair_index_[a * n + b] = pair_index_[b * n + a] = size();
        add({a, b, -1});
        continue;
      }
      for (Vertex c = b + 1; c < n; ++c) {
        const int idx = size();
        const Vertex p[3] = {a, b, c};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l)
              if (i != j && j != l && i != l) triple_index_[(p[i] * n + p[j]) * n + p[l]] = idx;
        add({a, b, c});
      }
    }
  }
}

Mask128 SubsetUniverse::to_mask(const TripleSystem& h) const {
  if (arity_ != 3 || h.vertex_count() != n_) throw std::invalid_argument("system does not match universe");
  Mask128 m;
  for (const Triple& t : h.edges()) m.set(index_of(t[0], t[1], t[2]));
  return m;
}

TripleSystem SubsetUniverse::to_system(const Mask128& m) const {
  if (arity_ != 3) throw std::invalid_argument("universe does not hold triples");
  std::vector<Triple> edges;
  m.for_each([&](int i) { edges.emplace_back(items_[i][0], items_[i][1], items_[i][2]); });
  return TripleSystem(n_, std::move(edges));
}

}  // namespace bergek4
