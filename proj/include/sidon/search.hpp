#pragma once

// Exhaustive search for Sidon sets: maximum sizes, canonical enumeration,
// testers for the T-subgroup and extendability conjectures, and the order
// forms admitted for dense Sidon sets.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sidon/group.hpp"

namespace sidon {

struct SearchOptions {
  // Node cap for the whole run, split evenly across the top-level branches so
  // results do not depend on the thread count.
  std::uint64_t node_budget = std::uint64_t{1} << 34;
  std::size_t max_sets = 16;
  bool parallel = true;
};

struct SearchResult {
  std::size_t sigma = 0;
  std::vector<ElemSet> extremal_sets;  // canonical representatives, sorted
  std::uint64_t nodes_visited = 0;
  bool exhaustive = true;
};

/// Lexicographically least image of S under translations and negation.
ElemSet canonical_form(const AbelianGroup& g, const ElemSet& s);

struct Enumeration {
  std::vector<ElemSet> sets;  // canonical, sorted
  std::uint64_t nodes_visited = 0;
  bool exhaustive = true;  // false if the node budget or max_sets stopped it
};

/// Canonical Sidon sets of size exactly k (one per translation/negation class).
Enumeration enumerate_sidon(const AbelianGroup& g, std::size_t k, SearchOptions options = {.max_sets = SIZE_MAX});

/// sigma(G), trying sizes from counting_bound(|G|) downward.
SearchResult max_sidon(const AbelianGroup& g, const SearchOptions& options = {});
inline SearchResult max_sidon_serial(const AbelianGroup& g, SearchOptions options = {}) {
  options.parallel = false;
  return max_sidon(g, options);
}

enum class Verdict { holds, fails, inconclusive };
std::string to_string(Verdict v);

struct TSubgroupReport {
  std::uint64_t p = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<ElemSet> counterexample;
  std::size_t canonical_sets = 0;  // translation/negation classes of size-p Sidon sets
  std::size_t affine_classes = 0;  // classes under x -> Ax + c, A in GL2(p)
  std::vector<std::size_t> class_sizes;  // translation/negation classes per affine class
  std::uint64_t nodes_visited = 0;
};

/// Every size-p Sidon set S in F_p^2 has T = G \ (S - S) u {0} a subgroup?
TSubgroupReport test_T_subgroup(std::uint64_t p, SearchOptions options = {.max_sets = SIZE_MAX});

/// An element x outside S with S u {x} Sidon, if any.
std::optional<Elem> find_completion(const AbelianGroup& g, const ElemSet& s);

struct ExtendableReport {
  std::uint64_t p = 0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<ElemSet> counterexample;
  std::size_t sets_tested = 0;
  std::size_t extendable = 0;
  std::uint64_t nodes_visited = 0;
};

/// Every size-p Sidon set in Z/(p^2+p+1) lies in a perfect difference set?
ExtendableReport test_extendable(std::uint64_t p, SearchOptions options = {.max_sets = SIZE_MAX});

enum class OrderForm { q2_q_1, q2, q2_minus_1, q2_minus_sqrt_q, q_q_minus_1, q_minus_1_squared };
std::string to_string(OrderForm f);

struct OrderMatch {
  OrderForm form;
  std::uint64_t q;
  friend bool operator==(const OrderMatch&, const OrderMatch&) = default;
};

/// Prime powers q > 1 with n of one of the six forms; sorted by q descending,
/// then by form in declaration order.
std::vector<OrderMatch> admissible_orders(std::uint64_t n);

}  // namespace sidon
