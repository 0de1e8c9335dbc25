#include "sidon/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sidon/field.hpp"
#include "sidon/numtheory.hpp"

namespace sidon {

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw PreconditionError("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw PreconditionError("invariant factors must form a divisibility chain");
    order_ *= factors_[i];
    if (order_ > UINT32_MAX) throw PreconditionError("group order exceeds 2^32");
  }
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const std::uint64_t> orders) {
  return AbelianGroup(invariant_factors(orders));
}

bool AbelianGroup::is_elementary_abelian() const {
  if (factors_.empty()) return true;
  return factors_.front() == factors_.back() && nt::is_prime(factors_.front());
}

Elem AbelianGroup::encode(std::span<const std::uint64_t> coords) const {
  if (coords.size() != factors_.size()) throw PreconditionError("coordinate count does not match group rank");
  std::uint64_t idx = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (coords[i] >= factors_[i]) throw PreconditionError("coordinate out of range");
    idx = idx * factors_[i] + coords[i];
  }
  return static_cast<Elem>(idx);
}

std::vector<std::uint64_t> AbelianGroup::decode(Elem x) const {
  std::vector<std::uint64_t> c(factors_.size());
  std::uint64_t v = x;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = v % factors_[i];
    v /= factors_[i];
  }
  return c;
}

Elem AbelianGroup::add(Elem a, Elem b) const {
  std::uint64_t out = 0, w = 1, va = a, vb = b;
  for (auto n : factors_) {
    std::uint64_t s = va % n + vb % n;
    if (s >= n) s -= n;
    out += s * w;
    w *= n;
    va /= n;
    vb /= n;
  }
  return static_cast<Elem>(out);
}

Elem AbelianGroup::neg(Elem a) const {
  std::uint64_t out = 0, w = 1, va = a;
  for (auto n : factors_) {
    std::uint64_t c = va % n;
    out += (c == 0 ? 0 : n - c) * w;
    w *= n;
    va /= n;
  }
  return static_cast<Elem>(out);
}

Elem AbelianGroup::sub(Elem a, Elem b) const {
  std::uint64_t out = 0, w = 1, va = a, vb = b;
  for (auto n : factors_) {
    std::uint64_t x = va % n, y = vb % n;
    out += (x >= y ? x - y : x + n - y) * w;
    w *= n;
    va /= n;
    vb /= n;
  }
  return static_cast<Elem>(out);
}

Elem AbelianGroup::mul(std::uint64_t k, Elem a) const {
  std::uint64_t out = 0, w = 1, va = a;
  for (auto n : factors_) {
    out += nt::mulmod(va % n, k % n, n) * w;
    w *= n;
    va /= n;
  }
  return static_cast<Elem>(out);
}

std::uint64_t AbelianGroup::element_order(Elem a) const {
  std::uint64_t ord = 1, va = a;
  for (auto n : factors_) {
    std::uint64_t c = va % n;
    ord = nt::lcm(ord, n / nt::gcd(c, n));
    va /= n;
  }
  return ord;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> cyclic_orders) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> powers;  // prime -> prime powers
  for (auto m : cyclic_orders) {
    if (m == 0) throw PreconditionError("cyclic order must be positive");
    if (m == 1) continue;
    for (auto [p, e] : nt::factorize(m)) powers[p].push_back(nt::ipow(p, e));
  }
  std::size_t k = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.begin(), v.end(), std::greater<>());
    k = std::max(k, v.size());
  }
  std::vector<std::uint64_t> out(k, 1);
  for (auto& [p, v] : powers)
    for (std::size_t j = 0; j < v.size(); ++j) out[k - 1 - j] *= v[j];
  return out;
}

CyclicProductIso::CyclicProductIso(std::vector<std::uint64_t> source_orders)
    : source_(std::move(source_orders)) {
  target_ = AbelianGroup::from_cyclic_orders(source_);
  std::map<std::uint64_t, std::vector<Part>> by_prime;
  for (std::size_t i = 0; i < source_.size(); ++i) {
    if (source_[i] == 0) throw PreconditionError("cyclic order must be positive");
    if (source_[i] == 1) continue;
    for (auto [p, e] : nt::factorize(source_[i])) by_prime[p].push_back({i, nt::ipow(p, e), 0});
  }
  const std::size_t k = target_.rank();
  for (auto& [p, v] : by_prime) {
    // Largest prime powers go to the last slots; equal ones keep source order.
    std::stable_sort(v.begin(), v.end(), [](const Part& a, const Part& b) { return a.prime_power < b.prime_power; });
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j].slot = k - v.size() + j;
      parts_.push_back(v[j]);
    }
  }
}

namespace {

// Solves y = c (mod m) for a single component inside modulus n (m | n, gcd(m, n/m) = 1).
std::uint64_t crt_lift(std::uint64_t c, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t cof = n / m;
  const std::uint64_t inv = *nt::invmod(cof % m, m);
  return nt::mulmod(nt::mulmod(c % m, inv, m), cof, n);
}

}  // namespace

Elem CyclicProductIso::forward(std::span<const std::uint64_t> source_coords) const {
  if (source_coords.size() != source_.size()) throw PreconditionError("coordinate count mismatch");
  const auto& tf = target_.factors();
  std::vector<std::uint64_t> y(tf.size(), 0);
  for (const auto& part : parts_) {
    const std::uint64_t n = tf[part.slot];
    y[part.slot] = (y[part.slot] + crt_lift(source_coords[part.source] % part.prime_power, part.prime_power, n)) % n;
  }
  return target_.encode(y);
}

std::vector<std::uint64_t> CyclicProductIso::backward(Elem x) const {
  const auto y = target_.decode(x);
  std::vector<std::uint64_t> out(source_.size(), 0);
  for (const auto& part : parts_) {
    const std::uint64_t m = source_[part.source];
    out[part.source] = (out[part.source] + crt_lift(y[part.slot] % part.prime_power, part.prime_power, m)) % m;
  }
  return out;
}

ElemSet normalized(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ElemSet subgroup_generated(const AbelianGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  ElemSet members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem x : gens) {
      if (x >= g.order()) throw PreconditionError("generator outside the group");
      Elem y = g.add(members[i], x);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  // Closure under addition of generators is a subgroup in a finite group.
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const AbelianGroup& g, std::span<const Elem> sorted_set) {
  if (sorted_set.empty() || sorted_set.front() != 0) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : sorted_set) in[x] = 1;
  for (Elem a : sorted_set)
    for (Elem b : sorted_set)
      if (!in[g.add(a, b)]) return false;
  return true;
}

}  // namespace sidon
