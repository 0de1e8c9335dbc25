#include <algorithm>
#include <cmath>

#include "sidon/sidon.hpp"

namespace sidon {

namespace {

Quadruple canonical_quadruple(Elem x, Elem y, Elem z, Elem w) {
  if (x > y) std::swap(x, y);
  if (z > w) std::swap(z, w);
  if (std::pair(z, w) < std::pair(x, y)) {
    std::swap(x, z);
    std::swap(y, w);
  }
  return {x, y, z, w};
}

}  // namespace

SidonReport is_sidon(const AbelianGroup& g, std::span<const Elem> s_in) {
  const ElemSet s = normalized(ElemSet(s_in.begin(), s_in.end()));
  const std::uint64_t n = g.order();
  for (Elem x : s)
    if (x >= n) throw PreconditionError("set element outside the group");

  SidonReport report;
  report.size = s.size();
  report.density_ratio = static_cast<double>(s.size()) / std::sqrt(static_cast<double>(n));

  // first_pair[d] = 1 + (i * |S| + j) of the first ordered pair with s_i - s_j = d.
  std::vector<std::uint64_t> first_pair(n, 0);
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const Elem d = g.sub(s[i], s[j]);
      if (first_pair[d] == 0) {
        first_pair[d] = 1 + i * k + j;
      } else if (report.is_sidon) {
        const std::size_t a = (first_pair[d] - 1) / k, b = (first_pair[d] - 1) % k;
        // s_a - s_b = s_i - s_j  =>  s_a + s_j = s_i + s_b
        report.is_sidon = false;
        report.witness = canonical_quadruple(s[a], s[j], s[i], s[b]);
      }
    }
  }

  for (Elem x = 0; x < n; ++x)
    if (x == 0 || first_pair[x] == 0) report.t_set.push_back(x);

  std::vector<std::uint32_t> reps(n, 0);
  for (Elem x : s)
    for (Elem y : s) ++reps[g.add(x, y)];
  for (auto r : reps) report.energy += std::uint64_t(r) * r;
  return report;
}

bool is_sidon_bruteforce(const AbelianGroup& g, std::span<const Elem> s_in) {
  const ElemSet s = normalized(ElemSet(s_in.begin(), s_in.end()));
  for (Elem x : s)
    for (Elem y : s)
      for (Elem z : s)
        for (Elem w : s) {
          if (g.add(x, y) != g.add(z, w)) continue;
          const bool trivial = (x == z && y == w) || (x == w && y == z);
          if (!trivial) return false;
        }
  return true;
}

std::uint64_t counting_bound(std::uint64_t n) {
  if (n == 0) throw PreconditionError("counting_bound: n must be positive");
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n))) + 2;
  while (s * (s - 1) > n - 1) --s;
  return s;
}

bool is_perfect_difference_set(const AbelianGroup& g, std::span<const Elem> s) {
  const auto report = is_sidon(g, s);
  return report.is_sidon && report.t_set.size() == 1;
}

}  // namespace sidon
