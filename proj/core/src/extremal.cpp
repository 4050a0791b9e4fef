#include "bergek4/extremal.hpp"

#include <stdexcept>
#include <string>

namespace bergek4 {

namespace {

void check_range(std::int64_t n, std::int64_t lo) {
  if (n < lo || n > kMaxFormulaN) {
    throw std::out_of_range("n out of range: " + std::to_string(n));
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("edge count overflow");
  return r;
}

}  // namespace

std::int64_t f(std::int64_t n) {
  check_range(n, 0);
  return checked_mul(checked_mul(n / 3, (n + 1) / 3), (n + 2) / 3);
}

std::int64_t diff(std::int64_t n) {
  check_range(n, 1);
  return f(n) - f(n - 1);
}

std::int64_t observation2_table(std::int64_t n) {
  check_range(n, 1);
  const std::int64_t k = n / 3;
  switch (n % 3) {
    case 0:
      return checked_mul(k, k) + 2;
    case 1:
      return checked_mul(k, k);
    default:
      return checked_mul(k, k) + k;
  }
}

Partition3 balanced_partition(int n) {
  if (n < 0) throw std::out_of_range("negative vertex count");
  const int sa = n / 3;
  const int sc = (n + 2) / 3;
  const int sb = n - sa - sc;
  Partition3 p;
  Vertex v = 0;
  for (int i = 0; i < sa; ++i) p.a.push_back(v++);
  for (int i = 0; i < sb; ++i) p.b.push_back(v++);
  for (int i = 0; i < sc; ++i) p.c.push_back(v++);
  return p;
}

TripleSystem balanced_3partite(int n) {
  const Partition3 p = balanced_partition(n);
  std::vector<Triple> edges;
  for (Vertex a : p.a)
    for (Vertex b : p.b)
      for (Vertex c : p.c) edges.emplace_back(a, b, c);
  return TripleSystem(n, std::move(edges));
}

std::vector<DiffDiscrepancy> diff_discrepancies(std::int64_t n_max) {
  std::vector<DiffDiscrepancy> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t t = observation2_table(n);
    const std::int64_t d = diff(n);
    if (t != d) out.push_back({n, t, d});
  }
  return out;
}

}  // namespace bergek4
