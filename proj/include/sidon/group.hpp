#pragma once

// Finite abelian groups in invariant-factor form.
//
// Elements are addressed by a mixed-radix index: coordinate 0 varies fastest.
// Index 0 is the identity. All set-valued algorithms in the toolkit work on
// these indices; coordinate vectors appear only at the serialization boundary.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

using Elem = std::uint32_t;
using ElemSet = std::vector<Elem>;  // kept sorted and duplicate-free

class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Factors must satisfy n_1 | n_2 | ... with every n_i >= 2.
  explicit AbelianGroup(std::vector<std::uint64_t> factors);
  /// Group isomorphic to the product of the given cyclic orders (any order,
  /// ones allowed), presented in invariant-factor form.
  static AbelianGroup from_cyclic_orders(std::span<const std::uint64_t> orders);
  static AbelianGroup cyclic(std::uint64_t n) { return from_cyclic_orders(std::vector<std::uint64_t>{n}); }

  const std::vector<std::uint64_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  bool is_elementary_abelian() const;

  Elem encode(std::span<const std::uint64_t> coords) const;
  std::vector<std::uint64_t> decode(Elem x) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(std::uint64_t k, Elem a) const;
  std::uint64_t element_order(Elem a) const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint64_t> factors_;
  std::uint64_t order_ = 1;
};

/// Invariant factors of a product of cyclic groups of the given orders.
std::vector<std::uint64_t> invariant_factors(std::span<const std::uint64_t> cyclic_orders);

/// Explicit isomorphism from Z/m_1 x ... x Z/m_k (arbitrary orders) to its
/// invariant-factor normal form, built from the CRT splitting of each factor
/// into prime-power parts.
class CyclicProductIso {
 public:
  explicit CyclicProductIso(std::vector<std::uint64_t> source_orders);

  const std::vector<std::uint64_t>& source_orders() const { return source_; }
  const AbelianGroup& target() const { return target_; }

  Elem forward(std::span<const std::uint64_t> source_coords) const;
  std::vector<std::uint64_t> backward(Elem x) const;

 private:
  struct Part {
    std::size_t source;  // source factor index
    std::uint64_t prime_power;
    std::size_t slot;  // target factor index
  };
  std::vector<std::uint64_t> source_;
  AbelianGroup target_;
  std::vector<Part> parts_;
};

/// Sorted, duplicate-free copy.
ElemSet normalized(ElemSet s);

/// Subgroup generated by gens, sorted.
ElemSet subgroup_generated(const AbelianGroup& g, std::span<const Elem> gens);

bool is_subgroup(const AbelianGroup& g, std::span<const Elem> sorted_set);

}  // namespace sidon
