#pragma once

// Sidon-set verification and structural predicates.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sidon/group.hpp"

namespace sidon {

/// Additive quadruple x + y = z + w with {x, y} != {z, w}, stored as
/// (x, y, z, w) with x <= y, z <= w and (x, y) < (z, w).
using Quadruple = std::array<Elem, 4>;

struct SidonReport {
  bool is_sidon = true;
  std::optional<Quadruple> witness;
  std::size_t size = 0;
  double density_ratio = 0.0;  // |S| / sqrt(|G|)
  ElemSet t_set;               // G \ (S - S), together with 0
  std::uint64_t energy = 0;    // ordered additive quadruples in S^4
};

/// Exact verification by tallying the nonzero differences of S in a flat
/// table indexed by group element. S may be unsorted; duplicates are ignored.
SidonReport is_sidon(const AbelianGroup& g, std::span<const Elem> s);

/// Reference check by looping over all quadruples; O(|S|^4).
bool is_sidon_bruteforce(const AbelianGroup& g, std::span<const Elem> s);

/// Largest s with s(s-1) <= n-1.
std::uint64_t counting_bound(std::uint64_t n);

bool is_perfect_difference_set(const AbelianGroup& g, std::span<const Elem> s);

/// Number of trivial ordered quadruples in a set of the given size.
inline std::uint64_t trivial_energy(std::uint64_t size) { return 2 * size * size - size; }

// ---------------------------------------------------------------------------

enum class CoverStatus { found, none, inconclusive };

struct SubgroupCover {
  CoverStatus status = CoverStatus::none;
  std::vector<ElemSet> subgroups;
};

/// Covers T (which must contain 0) by at most k_max subgroups of G contained
/// in T. Exhaustive for |T| <= 64, greedy above that.
SubgroupCover subgroup_union_cover(const AbelianGroup& g, std::span<const Elem> t, std::size_t k_max);

// ---------------------------------------------------------------------------

/// x -> phi(x) + translation, phi given by the images of the invariant-factor
/// generators e_i (coordinate unit vectors).
struct AffineMap {
  std::vector<Elem> generator_images;
  Elem translation = 0;

  Elem apply(const AbelianGroup& g, Elem x) const;
  ElemSet apply(const AbelianGroup& g, std::span<const Elem> s) const;
};

/// Checks that the generator images define an automorphism of g.
bool is_automorphism(const AbelianGroup& g, std::span<const Elem> generator_images);

struct AffineSearchOptions {
  std::uint64_t exhaustive_limit = 50'000'000;  // homomorphism candidates
  std::uint64_t random_trials = 2'000'000;
  std::uint64_t seed = 0x5eed;
};

struct AffineEquivalence {
  std::optional<AffineMap> map;
  bool exhaustive = true;  // false: sampled automorphisms only, "inconclusive" if absent
  bool inconclusive() const { return !map && !exhaustive; }
};

/// Searches for an automorphism phi and translation c with phi(S1) + c = S2.
AffineEquivalence affine_equivalent(const AbelianGroup& g, std::span<const Elem> s1, std::span<const Elem> s2,
                                    const AffineSearchOptions& options = {});

}  // namespace sidon
