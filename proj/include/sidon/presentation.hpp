#pragma once

// Invariant-factor presentation of a finite abelian group given concretely by
// its element list and group law (residues, quadratic forms, matrices, ...).
//
// Each Sylow subgroup is split by repeatedly taking an element of maximal
// order modulo the span of the basis found so far and correcting it by basis
// multiples until its order equals its order in the quotient. The prime parts
// are then merged by CRT into invariant-factor generators, and every element
// is indexed by the resulting mixed-radix coordinates.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sidon/group.hpp"
#include "sidon/numtheory.hpp"

namespace sidon {

template <class T, class Hash = std::hash<T>>
struct Presentation {
  AbelianGroup group;
  std::vector<T> generators;  // image of the i-th invariant-factor generator
  std::vector<T> element_at;  // mixed-radix index -> element
  std::unordered_map<T, Elem, Hash> index_of;

  Elem index(const T& x) const {
    auto it = index_of.find(x);
    if (it == index_of.end()) throw std::out_of_range("element not in presented group");
    return it->second;
  }
};

template <class T, class Hash = std::hash<T>, class Add>
Presentation<T, Hash> present_abelian(const std::vector<T>& elements, const T& zero, Add add) {
  const std::uint64_t n = elements.size();
  if (n == 0) throw std::invalid_argument("present_abelian: empty element list");

  auto multiple = [&](std::uint64_t k, T x) {
    T acc = zero;
    while (k) {
      if (k & 1) acc = add(acc, x);
      x = add(x, x);
      k >>= 1;
    }
    return acc;
  };
  auto order_of = [&](const T& x) {
    std::uint64_t ord = n;
    for (auto r : nt::prime_divisors(n == 1 ? 1 : n))
      while (ord % r == 0 && multiple(ord / r, x) == zero) ord /= r;
    return ord;
  };

  struct Gen {
    T elem;
    std::uint64_t order;
  };
  std::vector<std::vector<Gen>> prime_bases;

  for (auto [p, e] : nt::factorize(n == 1 ? 1 : n)) {
    std::vector<T> sylow;
    for (const auto& x : elements) {
      std::uint64_t o = order_of(x);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    std::vector<Gen> basis;
    std::unordered_map<T, std::vector<std::uint64_t>, Hash> span;
    span.emplace(zero, std::vector<std::uint64_t>{});
    while (span.size() < sylow.size()) {
      const T* best = nullptr;
      std::uint64_t best_m = 1;
      for (const auto& y : sylow) {
        std::uint64_t m = 1;
        T cur = y;
        while (!span.count(cur)) {
          cur = multiple(p, cur);
          m *= p;
        }
        if (m > best_m) {
          best_m = m;
          best = &y;
        }
      }
      T y = *best;
      const auto& c = span.at(multiple(best_m, y));
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % best_m != 0) throw std::logic_error("present_abelian: basis lifting failed");
        const std::uint64_t k = c[i] / best_m;
        y = add(y, multiple(basis[i].order - k % basis[i].order, basis[i].elem));
      }
      if (multiple(best_m, y) != zero) throw std::logic_error("present_abelian: corrected element has wrong order");
      std::unordered_map<T, std::vector<std::uint64_t>, Hash> next;
      next.reserve(span.size() * best_m);
      for (const auto& [h, coords] : span) {
        T cur = h;
        for (std::uint64_t k = 0; k < best_m; ++k) {
          auto v = coords;
          v.push_back(k);
          if (!next.emplace(cur, std::move(v)).second)
            throw std::logic_error("present_abelian: basis is not independent");
          cur = add(cur, y);
        }
      }
      span = std::move(next);
      basis.push_back({y, best_m});
    }
    prime_bases.push_back(std::move(basis));
  }

  std::size_t k = 0;
  for (const auto& b : prime_bases) k = std::max(k, b.size());
  std::vector<T> gens(k, zero);
  std::vector<std::uint64_t> orders(k, 1);
  for (const auto& b : prime_bases) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      gens[k - 1 - j] = add(gens[k - 1 - j], b[j].elem);
      orders[k - 1 - j] *= b[j].order;
    }
  }

  Presentation<T, Hash> out;
  out.group = AbelianGroup(orders);
  out.generators = gens;
  out.element_at.reserve(n);
  out.index_of.reserve(n);
  std::vector<std::uint64_t> coord(k, 0);
  T cur = zero;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    if (!out.index_of.emplace(cur, static_cast<Elem>(idx)).second)
      throw std::logic_error("present_abelian: presentation is not injective");
    out.element_at.push_back(cur);
    for (std::size_t i = 0; i < k; ++i) {
      cur = add(cur, gens[i]);
      if (++coord[i] < orders[i]) break;
      coord[i] = 0;
    }
  }
  return out;
}

}  // namespace sidon
