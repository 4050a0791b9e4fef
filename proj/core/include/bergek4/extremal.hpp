#pragma once

#include <cstdint>
#include <vector>

#include "bergek4/triple_system.hpp"

namespace bergek4 {

/// Largest n accepted by the closed-form counting functions.
inline constexpr std::int64_t kMaxFormulaN = 1'000'000;

/// floor(n/3) * floor((n+1)/3) * floor((n+2)/3): the number of triples of
/// the balanced complete 3-partite triple system on n points.
std::int64_t f(std::int64_t n);

/// f(n) - f(n-1), evaluated directly from f.
std::int64_t diff(std::int64_t n);

/// The three-case closed form k^2+2 / k^2 / k^2+k for n = 3k / 3k+1 / 3k+2.
/// Kept only for side-by-side comparison with diff(); it overstates diff by
/// two whenever n is a multiple of 3.
std::int64_t observation2_table(std::int64_t n);

struct Partition3 {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> c;
};

/// Canonical balanced partition of [0, n): floor(n/3) = |a| <= |b| <= |c| =
/// ceil(n/3), with the lowest ids in a.
Partition3 balanced_partition(int n);

/// All triples meeting each part of balanced_partition(n) exactly once.
TripleSystem balanced_3partite(int n);

/// Row of the observation2_table/diff comparison.
struct DiffDiscrepancy {
  std::int64_t n;
  std::int64_t table;
  std::int64_t direct;
};

/// Every n in [1, n_max] where observation2_table(n) != diff(n).
std::vector<DiffDiscrepancy> diff_discrepancies(std::int64_t n_max);

}  // namespace bergek4
